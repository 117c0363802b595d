//! Dimension-truncated cubical sets.
//!
//! A [`TCSet`] stores finite element sets for the levels `0..=D` together
//! with a contravariant action table: for a cube morphism `s : [m] -> [n]`
//! the action `X_s` is a function `X_n -> X_m`. Functoriality is checked
//! by [`TCSet::validate`], which every constructor in this crate runs.

mod adjoints;
mod io;
mod lifting;
mod limits;
mod negation;
mod paths;

pub use adjoints::{
    delta_const, delta_transpose, enum_natural_maps, gamma, gamma_section_transfer, nabla,
    nabla_index, nabla_rel, nabla_transpose, yoneda, NablaRel,
};
pub use io::{tcset_from_json, tcset_to_json, tcsetmor_from_json, tcsetmor_to_json};
pub use lifting::{
    check_nat_pullback, find_point_lifts, nat_square_report, NatPullbackReport,
    PointLiftStructure,
};
pub use limits::{
    check_pullback_universal, coproduct, image, initial, product, pullback, terminal,
    to_terminal, ProductDiagram, PullbackDiagram,
};
pub use negation::{double_neg_sub, neg_map, neg_sub};
pub use paths::{interval_exponential, is_hprop, path_object, PathObject};

use std::collections::BTreeMap;

use thiserror::Error;

use crate::cube::{enum_homs, CubeMor};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PresheafError {
    #[error("level {level} missing from data (truncation {trunc})")]
    MissingLevel { level: usize, trunc: usize },
    #[error("duplicate element `{name}` at level {level}")]
    DuplicateElement { level: usize, name: String },
    #[error("action at {mor} maps element {index} out of range")]
    ActionRange { mor: String, index: usize },
    #[error("action table has no entry for {mor}")]
    MissingAction { mor: String },
    #[error("identity action at level {level} moves element `{name}`")]
    IdentityViolation { level: usize, name: String },
    #[error("functoriality fails at s = {s}, t = {t} on element `{elem}`")]
    Functoriality { s: String, t: String, elem: String },
    #[error("naturality fails at s = {s} on element `{elem}`")]
    Naturality { s: String, elem: String },
    #[error("component at level {level} maps element {index} out of range")]
    ComponentRange { level: usize, index: usize },
    #[error("truncation mismatch: {lhs} vs {rhs}")]
    TruncMismatch { lhs: usize, rhs: usize },
    #[error("truncation {trunc} too small for path objects (need >= 1)")]
    TruncationTooSmall { trunc: usize },
    #[error("subobject not action-closed: element `{name}` at level {level} escapes under {mor}")]
    NotActionClosed {
        level: usize,
        name: String,
        mor: String,
    },
    #[error("negation computations disagree at level {level} on element `{name}`")]
    NegationDisagreement { level: usize, name: String },
    #[error("{0}")]
    Other(String),
}

/// All cube morphisms `[m] -> [n]` with `m, n <= trunc`, identities included.
pub fn all_cube_mors(trunc: usize) -> Vec<CubeMor> {
    let mut out = Vec::new();
    for m in 0..=trunc {
        for n in 0..=trunc {
            out.extend(enum_homs(m, n));
        }
    }
    out
}

/// A dimension-truncated cubical set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TCSet {
    trunc: usize,
    levels: Vec<Vec<String>>,
    /// Action tables for non-identity morphisms; `act` infers identities.
    action: BTreeMap<CubeMor, Vec<usize>>,
}

impl TCSet {
    /// Builds a truncated cubical set from raw data and validates it.
    pub fn new(
        trunc: usize,
        levels: Vec<Vec<String>>,
        action: BTreeMap<CubeMor, Vec<usize>>,
    ) -> Result<TCSet, PresheafError> {
        if levels.len() != trunc + 1 {
            return Err(PresheafError::MissingLevel {
                level: levels.len(),
                trunc,
            });
        }
        let x = TCSet {
            trunc,
            levels,
            action,
        };
        x.validate()?;
        Ok(x)
    }

    /// Builds from a closure giving the action of `s` on the element with
    /// index `i` at level `s.cod()`.
    pub fn from_action_fn(
        trunc: usize,
        levels: Vec<Vec<String>>,
        mut act: impl FnMut(&CubeMor, usize) -> usize,
    ) -> Result<TCSet, PresheafError> {
        let mut table = BTreeMap::new();
        for s in all_cube_mors(trunc) {
            if s.is_identity() {
                continue;
            }
            let n = s.cod();
            let tab: Vec<usize> = (0..levels[n].len()).map(|i| act(&s, i)).collect();
            table.insert(s, tab);
        }
        TCSet::new(trunc, levels, table)
    }

    pub fn trunc(&self) -> usize {
        self.trunc
    }

    pub fn level(&self, n: usize) -> &[String] {
        &self.levels[n]
    }

    pub fn level_size(&self, n: usize) -> usize {
        self.levels[n].len()
    }

    pub fn elem_name(&self, n: usize, i: usize) -> &str {
        &self.levels[n][i]
    }

    pub fn elem_index(&self, n: usize, name: &str) -> Option<usize> {
        self.levels[n].iter().position(|e| e == name)
    }

    pub fn total_size(&self) -> usize {
        self.levels.iter().map(|l| l.len()).sum()
    }

    /// The action `X_s : X_n -> X_m` applied to the element with index `i`
    /// at level `n = s.cod()`.
    pub fn act(&self, s: &CubeMor, i: usize) -> usize {
        if s.is_identity() {
            return i;
        }
        self.action
            .get(s)
            .unwrap_or_else(|| panic!("no action entry for {s}"))[i]
    }

    /// Checks both TCSet invariants: identity actions are the identity and
    /// the action is contravariantly functorial. Reports the first violated
    /// equation with the witnessing morphisms.
    pub fn validate(&self) -> Result<(), PresheafError> {
        for (s, tab) in &self.action {
            if s.dom() > self.trunc || s.cod() > self.trunc {
                return Err(PresheafError::Other(format!(
                    "action entry {s} outside truncation {}",
                    self.trunc
                )));
            }
            if tab.len() != self.levels[s.cod()].len() {
                return Err(PresheafError::MissingAction { mor: s.to_string() });
            }
            for (i, &j) in tab.iter().enumerate() {
                if j >= self.levels[s.dom()].len() {
                    return Err(PresheafError::ActionRange {
                        mor: s.to_string(),
                        index: i,
                    });
                }
            }
            if s.is_identity() {
                for (i, &j) in tab.iter().enumerate() {
                    if i != j {
                        return Err(PresheafError::IdentityViolation {
                            level: s.cod(),
                            name: self.levels[s.cod()][i].clone(),
                        });
                    }
                }
            }
        }
        for n in 0..=self.trunc {
            for (name, _) in self.levels[n].iter().enumerate().map(|(i, e)| (e, i)) {
                if self.levels[n].iter().filter(|e| *e == name).count() > 1 {
                    return Err(PresheafError::DuplicateElement {
                        level: n,
                        name: name.clone(),
                    });
                }
            }
        }
        // Every non-identity morphism must have a table.
        for s in all_cube_mors(self.trunc) {
            if !s.is_identity() && !self.action.contains_key(&s) {
                return Err(PresheafError::MissingAction { mor: s.to_string() });
            }
        }
        // Contravariance: X_{t.s} = X_s . X_t for s : [m] -> [n], t : [n] -> [k].
        for s in all_cube_mors(self.trunc) {
            for t in all_cube_mors(self.trunc) {
                if t.dom() != s.cod() {
                    continue;
                }
                let ts = CubeMor::compose(&t, &s).expect("composable");
                for i in 0..self.levels[t.cod()].len() {
                    let via_comp = self.act(&ts, i);
                    let via_steps = self.act(&s, self.act(&t, i));
                    if via_comp != via_steps {
                        return Err(PresheafError::Functoriality {
                            s: s.to_string(),
                            t: t.to_string(),
                            elem: self.levels[t.cod()][i].clone(),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// Restricts to a smaller truncation dimension.
    pub fn truncate(&self, new_trunc: usize) -> TCSet {
        assert!(new_trunc <= self.trunc);
        let levels = self.levels[..=new_trunc].to_vec();
        let action = self
            .action
            .iter()
            .filter(|(s, _)| s.dom() <= new_trunc && s.cod() <= new_trunc)
            .map(|(s, t)| (s.clone(), t.clone()))
            .collect();
        TCSet {
            trunc: new_trunc,
            levels,
            action,
        }
    }
}

/// A morphism of truncated cubical sets: level-wise functions commuting
/// with the action.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TCSetMor {
    source: TCSet,
    target: TCSet,
    components: Vec<Vec<usize>>,
}

impl TCSetMor {
    pub fn new(
        source: TCSet,
        target: TCSet,
        components: Vec<Vec<usize>>,
    ) -> Result<TCSetMor, PresheafError> {
        if source.trunc != target.trunc {
            return Err(PresheafError::TruncMismatch {
                lhs: source.trunc,
                rhs: target.trunc,
            });
        }
        let f = TCSetMor {
            source,
            target,
            components,
        };
        f.validate()?;
        Ok(f)
    }

    pub fn identity(x: &TCSet) -> TCSetMor {
        let components = (0..=x.trunc).map(|n| (0..x.level_size(n)).collect()).collect();
        TCSetMor {
            source: x.clone(),
            target: x.clone(),
            components,
        }
    }

    pub fn source(&self) -> &TCSet {
        &self.source
    }

    pub fn target(&self) -> &TCSet {
        &self.target
    }

    pub fn apply(&self, n: usize, i: usize) -> usize {
        self.components[n][i]
    }

    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    pub fn validate(&self) -> Result<(), PresheafError> {
        if self.components.len() != self.source.trunc + 1 {
            return Err(PresheafError::MissingLevel {
                level: self.components.len(),
                trunc: self.source.trunc,
            });
        }
        for n in 0..=self.source.trunc {
            if self.components[n].len() != self.source.level_size(n) {
                return Err(PresheafError::ComponentRange { level: n, index: 0 });
            }
            for &j in &self.components[n] {
                if j >= self.target.level_size(n) {
                    return Err(PresheafError::ComponentRange { level: n, index: j });
                }
            }
        }
        // Naturality: f_m(X_s(x)) = Y_s(f_n(x)) for s : [m] -> [n].
        for s in all_cube_mors(self.source.trunc) {
            let (m, n) = (s.dom(), s.cod());
            for i in 0..self.source.level_size(n) {
                let lhs = self.components[m][self.source.act(&s, i)];
                let rhs = self.target.act(&s, self.components[n][i]);
                if lhs != rhs {
                    return Err(PresheafError::Naturality {
                        s: s.to_string(),
                        elem: self.source.elem_name(n, i).to_string(),
                    });
                }
            }
        }
        Ok(())
    }

    pub fn compose(g: &TCSetMor, f: &TCSetMor) -> Result<TCSetMor, PresheafError> {
        if f.target != g.source {
            return Err(PresheafError::Other(
                "composition: middle objects differ".to_string(),
            ));
        }
        let components = (0..=f.source.trunc)
            .map(|n| {
                f.components[n]
                    .iter()
                    .map(|&j| g.components[n][j])
                    .collect()
            })
            .collect();
        TCSetMor::new(f.source.clone(), g.target.clone(), components)
    }

    /// Monomorphisms of presheaves are exactly the level-wise injections.
    pub fn is_mono(&self) -> bool {
        (0..=self.source.trunc).all(|n| {
            let mut seen = vec![false; self.target.level_size(n)];
            self.components[n].iter().all(|&j| {
                if seen[j] {
                    false
                } else {
                    seen[j] = true;
                    true
                }
            })
        })
    }

    /// Restricts both endpoints and components to a smaller truncation.
    pub fn truncate(&self, new_trunc: usize) -> TCSetMor {
        TCSetMor {
            source: self.source.truncate(new_trunc),
            target: self.target.truncate(new_trunc),
            components: self.components[..=new_trunc].to_vec(),
        }
    }

    pub fn is_iso(&self) -> bool {
        self.is_mono()
            && (0..=self.source.trunc)
                .all(|n| self.source.level_size(n) == self.target.level_size(n))
    }
}

/// An action-closed family of level subsets of an ambient TCSet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subobject {
    ambient: TCSet,
    members: Vec<Vec<bool>>,
}

impl Subobject {
    pub fn new(ambient: TCSet, members: Vec<Vec<bool>>) -> Result<Subobject, PresheafError> {
        let a = Subobject { ambient, members };
        a.validate()?;
        Ok(a)
    }

    /// The empty subobject of `y`.
    pub fn empty(y: &TCSet) -> Subobject {
        let members = (0..=y.trunc).map(|n| vec![false; y.level_size(n)]).collect();
        Subobject {
            ambient: y.clone(),
            members,
        }
    }

    /// The full subobject of `y`.
    pub fn full(y: &TCSet) -> Subobject {
        let members = (0..=y.trunc).map(|n| vec![true; y.level_size(n)]).collect();
        Subobject {
            ambient: y.clone(),
            members,
        }
    }

    /// Closes a family of level subsets under the ambient action.
    pub fn closure(y: &TCSet, mut members: Vec<Vec<bool>>) -> Subobject {
        let mors = all_cube_mors(y.trunc);
        loop {
            let mut changed = false;
            for s in &mors {
                let (m, n) = (s.dom(), s.cod());
                for i in 0..y.level_size(n) {
                    if members[n][i] {
                        let j = y.act(s, i);
                        if !members[m][j] {
                            members[m][j] = true;
                            changed = true;
                        }
                    }
                }
            }
            if !changed {
                break;
            }
        }
        Subobject {
            ambient: y.clone(),
            members,
        }
    }

    pub fn ambient(&self) -> &TCSet {
        &self.ambient
    }

    pub fn contains(&self, n: usize, i: usize) -> bool {
        self.members[n][i]
    }

    pub fn level_count(&self, n: usize) -> usize {
        self.members[n].iter().filter(|b| **b).count()
    }

    pub fn validate(&self) -> Result<(), PresheafError> {
        for s in all_cube_mors(self.ambient.trunc) {
            let (m, n) = (s.dom(), s.cod());
            for i in 0..self.ambient.level_size(n) {
                if self.members[n][i] && !self.members[m][self.ambient.act(&s, i)] {
                    return Err(PresheafError::NotActionClosed {
                        level: n,
                        name: self.ambient.elem_name(n, i).to_string(),
                        mor: s.to_string(),
                    });
                }
            }
        }
        Ok(())
    }

    /// The subobject as a TCSet in its own right, together with the
    /// inclusion morphism into the ambient object.
    pub fn inclusion(&self) -> TCSetMor {
        let trunc = self.ambient.trunc;
        // index maps: sub index -> ambient index
        let emb: Vec<Vec<usize>> = (0..=trunc)
            .map(|n| {
                (0..self.ambient.level_size(n))
                    .filter(|&i| self.members[n][i])
                    .collect()
            })
            .collect();
        let back: Vec<BTreeMap<usize, usize>> = emb
            .iter()
            .map(|v| v.iter().enumerate().map(|(k, &i)| (i, k)).collect())
            .collect();
        let levels: Vec<Vec<String>> = (0..=trunc)
            .map(|n| {
                emb[n]
                    .iter()
                    .map(|&i| self.ambient.elem_name(n, i).to_string())
                    .collect()
            })
            .collect();
        let sub = TCSet::from_action_fn(trunc, levels, |s, k| {
            let i = emb[s.cod()][k];
            back[s.dom()][&self.ambient.act(s, i)]
        })
        .expect("action-closed subobject restricts functorially");
        let components = emb;
        TCSetMor::new(sub, self.ambient.clone(), components)
            .expect("inclusion of an action-closed subobject is natural")
    }

    pub fn complement_level0(&self) -> Vec<usize> {
        (0..self.ambient.level_size(0))
            .filter(|&i| !self.members[0][i])
            .collect()
    }
}

impl Subobject {
    pub fn eq_as_subobject(&self, other: &Subobject) -> bool {
        self.ambient == other.ambient && self.members == other.members
    }
}

/// Searches for a natural map `X -> Y` whose value at element `i` of level
/// `n` is restricted to `candidates(n, i)`. Backtracking with incremental
/// naturality checks; `None` when no such map exists.
pub fn find_natural_map(
    x: &TCSet,
    y: &TCSet,
    candidates: impl Fn(usize, usize) -> Vec<usize>,
) -> Option<TCSetMor> {
    let mut all = search_natural_maps(x, y, &candidates, Some(1));
    all.pop()
}

/// Enumerates all natural maps `X -> Y` (optionally capped), subject to a
/// per-element candidate restriction.
pub fn search_natural_maps(
    x: &TCSet,
    y: &TCSet,
    candidates: &impl Fn(usize, usize) -> Vec<usize>,
    cap: Option<usize>,
) -> Vec<TCSetMor> {
    let trunc = x.trunc();
    let mors = all_cube_mors(trunc);
    // Flatten elements as (level, index) in lexicographic order.
    let mut slots: Vec<(usize, usize)> = Vec::new();
    for n in 0..=trunc {
        for i in 0..x.level_size(n) {
            slots.push((n, i));
        }
    }
    let slot_of = |n: usize, i: usize| -> usize {
        (0..n).map(|k| x.level_size(k)).sum::<usize>() + i
    };
    let mut assign: Vec<Option<usize>> = vec![None; slots.len()];
    let mut results = Vec::new();

    fn consistent(
        x: &TCSet,
        y: &TCSet,
        mors: &[CubeMor],
        assign: &[Option<usize>],
        slot_of: &impl Fn(usize, usize) -> usize,
        n: usize,
        i: usize,
        v: usize,
    ) -> bool {
        // constraints where (n, i) is the top element: f_m(X_s(i)) = Y_s(v)
        for s in mors {
            if s.cod() == n {
                let m = s.dom();
                let xj = x.act(s, i);
                if let Some(w) = assign[slot_of(m, xj)] {
                    if w != y.act(s, v) {
                        return false;
                    }
                }
            }
            // constraints where (n, i) is the bottom element: for assigned
            // top elements t at level k with X_s(t) = i, f_n(i) = Y_s(f_k(t)).
            if s.dom() == n {
                let k = s.cod();
                for t in 0..x.level_size(k) {
                    if x.act(s, t) == i {
                        if let Some(w) = assign[slot_of(k, t)] {
                            if v != y.act(s, w) {
                                return false;
                            }
                        }
                    }
                }
            }
        }
        true
    }

    #[allow(clippy::too_many_arguments)]
    fn rec(
        x: &TCSet,
        y: &TCSet,
        mors: &[CubeMor],
        slots: &[(usize, usize)],
        slot_of: &impl Fn(usize, usize) -> usize,
        candidates: &impl Fn(usize, usize) -> Vec<usize>,
        assign: &mut Vec<Option<usize>>,
        pos: usize,
        cap: Option<usize>,
        results: &mut Vec<TCSetMor>,
    ) {
        if let Some(c) = cap {
            if results.len() >= c {
                return;
            }
        }
        if pos == slots.len() {
            let mut components: Vec<Vec<usize>> = Vec::with_capacity(x.trunc() + 1);
            let mut k = 0;
            for n in 0..=x.trunc() {
                let mut level = Vec::with_capacity(x.level_size(n));
                for _ in 0..x.level_size(n) {
                    level.push(assign[k].unwrap());
                    k += 1;
                }
                components.push(level);
            }
            if let Ok(f) = TCSetMor::new(x.clone(), y.clone(), components) {
                results.push(f);
            }
            return;
        }
        let (n, i) = slots[pos];
        for v in candidates(n, i) {
            if v >= y.level_size(n) {
                continue;
            }
            if consistent(x, y, mors, assign, slot_of, n, i, v) {
                assign[pos] = Some(v);
                rec(x, y, mors, slots, slot_of, candidates, assign, pos + 1, cap, results);
                assign[pos] = None;
            }
        }
    }

    rec(
        x, y, &mors, &slots, &slot_of, candidates, &mut assign, 0, cap, &mut results,
    );
    results
}

/// Searches for a section of `b : P -> Q`, i.e. a natural `s : Q -> P`
/// with `b . s = id`.
pub fn find_section(b: &TCSetMor) -> Option<TCSetMor> {
    let p = b.source();
    let q = b.target();
    find_natural_map(q, p, |n, i| {
        (0..p.level_size(n)).filter(|&j| b.apply(n, j) == i).collect()
    })
}

/// Searches for an isomorphism `X -> Y` by explicit bijection search with
/// naturality pruning.
pub fn find_iso(x: &TCSet, y: &TCSet) -> Option<TCSetMor> {
    if x.trunc() != y.trunc() {
        return None;
    }
    for n in 0..=x.trunc() {
        if x.level_size(n) != y.level_size(n) {
            return None;
        }
    }
    let trunc = x.trunc();
    let mors = all_cube_mors(trunc);
    let mut slots: Vec<(usize, usize)> = Vec::new();
    for n in 0..=trunc {
        for i in 0..x.level_size(n) {
            slots.push((n, i));
        }
    }
    let offsets: Vec<usize> = (0..=trunc)
        .scan(0usize, |acc, n| {
            let o = *acc;
            *acc += x.level_size(n);
            Some(o)
        })
        .collect();
    let slot_of = move |n: usize, i: usize| offsets[n] + i;
    let mut assign: Vec<Option<usize>> = vec![None; slots.len()];
    let mut used: Vec<Vec<bool>> = (0..=trunc).map(|n| vec![false; y.level_size(n)]).collect();

    #[allow(clippy::too_many_arguments)]
    fn rec(
        x: &TCSet,
        y: &TCSet,
        mors: &[CubeMor],
        slots: &[(usize, usize)],
        slot_of: &impl Fn(usize, usize) -> usize,
        assign: &mut Vec<Option<usize>>,
        used: &mut Vec<Vec<bool>>,
        pos: usize,
    ) -> bool {
        if pos == slots.len() {
            return true;
        }
        let (n, i) = slots[pos];
        for v in 0..y.level_size(n) {
            if used[n][v] {
                continue;
            }
            let ok = mors.iter().all(|s| {
                if s.cod() == n {
                    let xj = x.act(s, i);
                    if let Some(w) = assign[slot_of(s.dom(), xj)] {
                        if w != y.act(s, v) {
                            return false;
                        }
                    }
                }
                if s.dom() == n {
                    let k = s.cod();
                    for t in 0..x.level_size(k) {
                        if x.act(s, t) == i {
                            if let Some(w) = assign[slot_of(k, t)] {
                                if v != y.act(s, w) {
                                    return false;
                                }
                            }
                        }
                    }
                }
                true
            });
            if ok {
                assign[pos] = Some(v);
                used[n][v] = true;
                if rec(x, y, mors, slots, slot_of, assign, used, pos + 1) {
                    return true;
                }
                assign[pos] = None;
                used[n][v] = false;
            }
        }
        false
    }

    if !rec(x, y, &mors, &slots, &slot_of, &mut assign, &mut used, 0) {
        return None;
    }
    let mut components: Vec<Vec<usize>> = Vec::with_capacity(trunc + 1);
    let mut k = 0;
    for n in 0..=trunc {
        let mut level = Vec::with_capacity(x.level_size(n));
        for _ in 0..x.level_size(n) {
            level.push(assign[k].unwrap());
            k += 1;
        }
        components.push(level);
    }
    TCSetMor::new(x.clone(), y.clone(), components).ok()
}
