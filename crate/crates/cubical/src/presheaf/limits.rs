//! Level-wise limits and colimits. In a presheaf category these are
//! computed pointwise with the induced actions.

use super::{PresheafError, Subobject, TCSet, TCSetMor};

/// The terminal truncated cubical set (constant on a one-element set).
pub fn terminal(trunc: usize) -> TCSet {
    super::adjoints::delta_const(&["*".to_string()], trunc)
}

/// The initial truncated cubical set (constant on the empty set).
pub fn initial(trunc: usize) -> TCSet {
    super::adjoints::delta_const(&[], trunc)
}

/// The unique map into the terminal object.
pub fn to_terminal(x: &TCSet) -> TCSetMor {
    let t = terminal(x.trunc());
    let components = (0..=x.trunc()).map(|n| vec![0; x.level_size(n)]).collect();
    TCSetMor::new(x.clone(), t, components).expect("terminal map is natural")
}

#[derive(Debug, Clone)]
pub struct ProductDiagram {
    pub object: TCSet,
    pub proj_left: TCSetMor,
    pub proj_right: TCSetMor,
}

/// The level-wise binary product.
pub fn product(x: &TCSet, y: &TCSet) -> Result<ProductDiagram, PresheafError> {
    if x.trunc() != y.trunc() {
        return Err(PresheafError::TruncMismatch {
            lhs: x.trunc(),
            rhs: y.trunc(),
        });
    }
    let trunc = x.trunc();
    let levels: Vec<Vec<String>> = (0..=trunc)
        .map(|n| {
            let mut level = Vec::with_capacity(x.level_size(n) * y.level_size(n));
            for i in 0..x.level_size(n) {
                for j in 0..y.level_size(n) {
                    level.push(format!("({},{})", x.elem_name(n, i), y.elem_name(n, j)));
                }
            }
            level
        })
        .collect();
    let object = TCSet::from_action_fn(trunc, levels, |s, k| {
        let n = s.cod();
        let (i, j) = (k / y.level_size(n), k % y.level_size(n));
        x.act(s, i) * y.level_size(s.dom()) + y.act(s, j)
    })?;
    let proj_left = TCSetMor::new(
        object.clone(),
        x.clone(),
        (0..=trunc)
            .map(|n| (0..object.level_size(n)).map(|k| k / y.level_size(n)).collect())
            .collect(),
    )?;
    let proj_right = TCSetMor::new(
        object.clone(),
        y.clone(),
        (0..=trunc)
            .map(|n| (0..object.level_size(n)).map(|k| k % y.level_size(n)).collect())
            .collect(),
    )?;
    Ok(ProductDiagram {
        object,
        proj_left,
        proj_right,
    })
}

impl ProductDiagram {
    /// The pairing `<f, g> : A -> X x Y` of maps with common source.
    pub fn pair(&self, f: &TCSetMor, g: &TCSetMor) -> Result<TCSetMor, PresheafError> {
        let a = f.source();
        let y = self.proj_right.target();
        let trunc = a.trunc();
        let components: Vec<Vec<usize>> = (0..=trunc)
            .map(|n| {
                (0..a.level_size(n))
                    .map(|i| f.apply(n, i) * y.level_size(n) + g.apply(n, i))
                    .collect()
            })
            .collect();
        TCSetMor::new(a.clone(), self.object.clone(), components)
    }
}

#[derive(Debug, Clone)]
pub struct PullbackDiagram {
    pub object: TCSet,
    pub proj_left: TCSetMor,
    pub proj_right: TCSetMor,
    /// Element data per level: pairs of (left index, right index).
    pairs: Vec<Vec<(usize, usize)>>,
}

/// The level-wise pullback of `f : X -> Z` and `g : Y -> Z`.
pub fn pullback(f: &TCSetMor, g: &TCSetMor) -> Result<PullbackDiagram, PresheafError> {
    if f.target() != g.target() {
        return Err(PresheafError::Other(
            "pullback: targets differ".to_string(),
        ));
    }
    let (x, y) = (f.source(), g.source());
    let trunc = x.trunc();
    let mut pairs: Vec<Vec<(usize, usize)>> = Vec::with_capacity(trunc + 1);
    for n in 0..=trunc {
        let mut level = Vec::new();
        for i in 0..x.level_size(n) {
            for j in 0..y.level_size(n) {
                if f.apply(n, i) == g.apply(n, j) {
                    level.push((i, j));
                }
            }
        }
        pairs.push(level);
    }
    let levels: Vec<Vec<String>> = (0..=trunc)
        .map(|n| {
            pairs[n]
                .iter()
                .map(|&(i, j)| format!("({},{})", x.elem_name(n, i), y.elem_name(n, j)))
                .collect()
        })
        .collect();
    let pairs_ref = pairs.clone();
    let object = TCSet::from_action_fn(trunc, levels, |s, k| {
        let (i, j) = pairs_ref[s.cod()][k];
        let target = (x.act(s, i), y.act(s, j));
        pairs_ref[s.dom()]
            .iter()
            .position(|p| *p == target)
            .expect("pullback is action-closed")
    })?;
    let proj_left = TCSetMor::new(
        object.clone(),
        x.clone(),
        pairs.iter().map(|l| l.iter().map(|&(i, _)| i).collect()).collect(),
    )?;
    let proj_right = TCSetMor::new(
        object.clone(),
        y.clone(),
        pairs.iter().map(|l| l.iter().map(|&(_, j)| j).collect()).collect(),
    )?;
    Ok(PullbackDiagram {
        object,
        proj_left,
        proj_right,
        pairs,
    })
}

impl PullbackDiagram {
    /// The map induced by a cone `u : A -> X`, `v : A -> Y` with
    /// `f . u = g . v`.
    pub fn induced(&self, u: &TCSetMor, v: &TCSetMor) -> Result<TCSetMor, PresheafError> {
        let a = u.source();
        let trunc = a.trunc();
        let components: Vec<Vec<usize>> = (0..=trunc)
            .map(|n| {
                (0..a.level_size(n))
                    .map(|i| {
                        let target = (u.apply(n, i), v.apply(n, i));
                        self.pairs[n]
                            .iter()
                            .position(|p| *p == target)
                            .expect("cone factors through the pullback")
                    })
                    .collect()
            })
            .collect();
        TCSetMor::new(a.clone(), self.object.clone(), components)
    }

    pub fn pair_at(&self, n: usize, k: usize) -> (usize, usize) {
        self.pairs[n][k]
    }
}

/// The level-wise binary coproduct, with injections.
pub fn coproduct(
    x: &TCSet,
    y: &TCSet,
) -> Result<(TCSet, TCSetMor, TCSetMor), PresheafError> {
    if x.trunc() != y.trunc() {
        return Err(PresheafError::TruncMismatch {
            lhs: x.trunc(),
            rhs: y.trunc(),
        });
    }
    let trunc = x.trunc();
    let levels: Vec<Vec<String>> = (0..=trunc)
        .map(|n| {
            let mut level: Vec<String> = (0..x.level_size(n))
                .map(|i| format!("inl:{}", x.elem_name(n, i)))
                .collect();
            level.extend((0..y.level_size(n)).map(|j| format!("inr:{}", y.elem_name(n, j))));
            level
        })
        .collect();
    let object = TCSet::from_action_fn(trunc, levels, |s, k| {
        let n = s.cod();
        if k < x.level_size(n) {
            x.act(s, k)
        } else {
            x.level_size(s.dom()) + y.act(s, k - x.level_size(n))
        }
    })?;
    let inl = TCSetMor::new(
        x.clone(),
        object.clone(),
        (0..=trunc).map(|n| (0..x.level_size(n)).collect()).collect(),
    )?;
    let inr = TCSetMor::new(
        y.clone(),
        object.clone(),
        (0..=trunc)
            .map(|n| (0..y.level_size(n)).map(|j| x.level_size(n) + j).collect())
            .collect(),
    )?;
    Ok((object, inl, inr))
}

/// The image of a morphism as a subobject of its target.
pub fn image(f: &TCSetMor) -> Subobject {
    let y = f.target();
    let members: Vec<Vec<bool>> = (0..=y.trunc())
        .map(|n| {
            let mut level = vec![false; y.level_size(n)];
            for i in 0..f.source().level_size(n) {
                level[f.apply(n, i)] = true;
            }
            level
        })
        .collect();
    Subobject::new(y.clone(), members).expect("image of a natural map is action-closed")
}

/// Exhaustively verifies the universal property of a pullback square on a
/// small instance: every cone factors uniquely.
pub fn check_pullback_universal(
    f: &TCSetMor,
    g: &TCSetMor,
    pb: &PullbackDiagram,
    cone_source: &TCSet,
) -> Result<(), PresheafError> {
    use super::adjoints::enum_natural_maps;
    for u in enum_natural_maps(cone_source, f.source()) {
        for v in enum_natural_maps(cone_source, g.source()) {
            let fu = TCSetMor::compose(f, &u)?;
            let gv = TCSetMor::compose(g, &v)?;
            if fu != gv {
                continue;
            }
            let h = pb.induced(&u, &v)?;
            if TCSetMor::compose(&pb.proj_left, &h)? != u
                || TCSetMor::compose(&pb.proj_right, &h)? != v
            {
                return Err(PresheafError::Other(
                    "pullback mediating map does not commute".to_string(),
                ));
            }
            // uniqueness: any other factorization agrees
            let all = enum_natural_maps(cone_source, &pb.object);
            for h2 in all {
                if TCSetMor::compose(&pb.proj_left, &h2)? == u
                    && TCSetMor::compose(&pb.proj_right, &h2)? == v
                    && h2 != h
                {
                    return Err(PresheafError::Other(
                        "pullback mediating map is not unique".to_string(),
                    ));
                }
            }
        }
    }
    Ok(())
}
