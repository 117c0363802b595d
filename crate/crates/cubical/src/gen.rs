//! Seeded instance generators for the verification suites: random
//! truncated cubical sets (quotients of coproducts of representables and
//! constants), random maps and subobjects, monomorphisms that carry
//! point-lift structures (built from connected-component colorings), and
//! fiberwise-codiscrete h-propositions over constant bases.
//!
//! All generators are deterministic functions of the supplied RNG, so a
//! fixed seed reproduces the whole corpus byte for byte.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::presheaf::{
    all_cube_mors, coproduct, delta_const, nabla, product, terminal, yoneda, Subobject, TCSet,
    TCSetMor,
};

/// Size bounds for generated instances.
#[derive(Debug, Clone, Copy)]
pub struct GenConfig {
    pub trunc: usize,
    /// Cap on the size of any single level of a generated object.
    pub max_level: usize,
}

impl Default for GenConfig {
    fn default() -> Self {
        GenConfig {
            trunc: 2,
            max_level: 6,
        }
    }
}

/// Union-find over the flattened element set of a TCSet.
struct Partition {
    parent: Vec<usize>,
}

impl Partition {
    fn new(n: usize) -> Partition {
        Partition {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, i: usize) -> usize {
        if self.parent[i] != i {
            let root = self.find(self.parent[i]);
            self.parent[i] = root;
        }
        self.parent[i]
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        true
    }
}

fn flat_offsets(x: &TCSet) -> Vec<usize> {
    let mut offsets = vec![0];
    for n in 0..=x.trunc() {
        offsets.push(offsets[n] + x.level_size(n));
    }
    offsets
}

/// Quotients a TCSet by the congruence generated by the given same-level
/// element identifications: each identification is propagated along every
/// action map until the relation is action-compatible, so the induced
/// action on classes is well defined.
pub fn quotient(x: &TCSet, pairs: &[(usize, usize, usize)]) -> TCSet {
    let offsets = flat_offsets(x);
    let mut part = Partition::new(offsets[x.trunc() + 1]);
    let mors = all_cube_mors(x.trunc());
    let mut worklist: Vec<(usize, usize, usize)> = pairs.to_vec();
    while let Some((n, i, j)) = worklist.pop() {
        if !part.union(offsets[n] + i, offsets[n] + j) {
            continue;
        }
        for s in mors.iter().filter(|s| s.cod() == n) {
            worklist.push((s.dom(), x.act(s, i), x.act(s, j)));
        }
    }
    // class representatives per level, in element order
    let mut reps: Vec<Vec<usize>> = Vec::with_capacity(x.trunc() + 1);
    let mut class_of: Vec<Vec<usize>> = Vec::with_capacity(x.trunc() + 1);
    for n in 0..=x.trunc() {
        let mut level_reps = Vec::new();
        let mut classes = Vec::with_capacity(x.level_size(n));
        for i in 0..x.level_size(n) {
            let root = part.find(offsets[n] + i);
            let pos = match level_reps.iter().position(|&r| r == root) {
                Some(p) => p,
                None => {
                    level_reps.push(root);
                    level_reps.len() - 1
                }
            };
            classes.push(pos);
        }
        reps.push(level_reps);
        class_of.push(classes);
    }
    let levels: Vec<Vec<String>> = (0..=x.trunc())
        .map(|n| (0..reps[n].len()).map(|c| format!("q{n}_{c}")).collect())
        .collect();
    TCSet::from_action_fn(x.trunc(), levels, |s, c| {
        // apply the action to any member of the class; the congruence
        // closure makes the choice irrelevant
        let i = class_of[s.cod()]
            .iter()
            .position(|&k| k == c)
            .expect("class is inhabited");
        class_of[s.dom()][x.act(s, i)]
    })
    .expect("congruence quotient is functorial")
}

fn random_piece(rng: &mut ChaCha8Rng, cfg: GenConfig) -> TCSet {
    match rng.gen_range(0..4) {
        0 => terminal(cfg.trunc),
        1 => yoneda(1, cfg.trunc),
        2 => {
            let k = rng.gen_range(1..=2);
            let names: Vec<String> = (0..k).map(|i| format!("z{i}")).collect();
            delta_const(&names, cfg.trunc)
        }
        _ => {
            let names: Vec<String> = (0..rng.gen_range(1..=2)).map(|i| format!("s{i}")).collect();
            nabla(&names, cfg.trunc)
        }
    }
}

/// A random truncated cubical set: a coproduct of one to three small
/// pieces (terminal, interval representable, constants, codiscretes),
/// optionally collapsed by a random congruence, with level sizes capped.
pub fn random_tcset(rng: &mut ChaCha8Rng, cfg: GenConfig) -> TCSet {
    loop {
        let mut x = random_piece(rng, cfg);
        for _ in 0..rng.gen_range(0..2) {
            let piece = random_piece(rng, cfg);
            if (0..=cfg.trunc)
                .any(|n| x.level_size(n) + piece.level_size(n) > cfg.max_level)
            {
                break;
            }
            let (obj, _, _) = coproduct(&x, &piece).expect("same truncation");
            x = obj;
        }
        // random identifications, then the congruence closure
        let mut pairs = Vec::new();
        for _ in 0..rng.gen_range(0..3) {
            let n = rng.gen_range(0..=cfg.trunc);
            if x.level_size(n) >= 2 {
                let i = rng.gen_range(0..x.level_size(n));
                let j = rng.gen_range(0..x.level_size(n));
                pairs.push((n, i, j));
            }
        }
        let q = quotient(&x, &pairs);
        if (0..=q.trunc()).all(|n| q.level_size(n) <= cfg.max_level && q.level_size(n) > 0) {
            return q;
        }
    }
}

/// A random subobject of `y`: the action closure of a random member set.
pub fn random_subobject(rng: &mut ChaCha8Rng, y: &TCSet) -> Subobject {
    let members: Vec<Vec<bool>> = (0..=y.trunc())
        .map(|n| (0..y.level_size(n)).map(|_| rng.gen_bool(0.4)).collect())
        .collect();
    Subobject::closure(y, members)
}

/// A random map into `y`: a random action-closed subobject of
/// `y x Delta(Z)` for a small random constant `Z`, projected back to `y`.
/// This produces non-monic, non-constant maps with controlled size.
pub fn random_map_into(rng: &mut ChaCha8Rng, y: &TCSet) -> TCSetMor {
    let k = rng.gen_range(1..=2);
    let z: Vec<String> = (0..k).map(|i| format!("t{i}")).collect();
    let dz = delta_const(&z, y.trunc());
    let prod = product(y, &dz).expect("same truncation");
    let sub = random_subobject(rng, &prod.object);
    let incl = sub.inclusion();
    TCSetMor::compose(&prod.proj_left, &incl).expect("composable")
}

/// Labels every element of `y` with its connected component: two elements
/// are connected when some action map sends one to the other.
pub fn components(y: &TCSet) -> Vec<Vec<usize>> {
    let offsets = flat_offsets(y);
    let mut part = Partition::new(offsets[y.trunc() + 1]);
    for s in all_cube_mors(y.trunc()) {
        for i in 0..y.level_size(s.cod()) {
            part.union(offsets[s.cod()] + i, offsets[s.dom()] + y.act(&s, i));
        }
    }
    // renumber roots consecutively
    let mut roots: Vec<usize> = Vec::new();
    let mut labels = Vec::with_capacity(y.trunc() + 1);
    for n in 0..=y.trunc() {
        let mut level = Vec::with_capacity(y.level_size(n));
        for i in 0..y.level_size(n) {
            let root = part.find(offsets[n] + i);
            let pos = match roots.iter().position(|&r| r == root) {
                Some(p) => p,
                None => {
                    roots.push(root);
                    roots.len() - 1
                }
            };
            level.push(pos);
        }
        labels.push(level);
    }
    labels
}

/// A monomorphism into `y` carrying a point-lift structure: the inclusion
/// of the union of a random set of connected components. Both the
/// subobject and its complement are closed under the action, which is
/// what makes the classifying map natural and every point-lifting problem
/// solvable by the element itself.
pub fn component_mono(rng: &mut ChaCha8Rng, y: &TCSet) -> TCSetMor {
    let labels = components(y);
    let count = labels
        .iter()
        .flat_map(|l| l.iter().copied())
        .max()
        .map_or(0, |m| m + 1);
    let colors: Vec<bool> = (0..count).map(|_| rng.gen_bool(0.5)).collect();
    let members: Vec<Vec<bool>> = labels
        .iter()
        .map(|level| level.iter().map(|&c| colors[c]).collect())
        .collect();
    Subobject::new(y.clone(), members)
        .expect("component unions are action-closed")
        .inclusion()
}

/// A fiberwise-codiscrete h-proposition over the constant base on `z`:
/// the coproduct over each point of `z` of the codiscrete object on a
/// fiber set of the given size, mapping each summand to its point. A
/// zero entry gives an empty fiber.
pub fn codiscrete_hprop_over(z: &[String], fiber_sizes: &[usize], trunc: usize) -> TCSetMor {
    assert_eq!(z.len(), fiber_sizes.len());
    let dz = delta_const(z, trunc);
    let mut total: Option<(TCSet, Vec<Vec<usize>>)> = None;
    for (zi, &size) in fiber_sizes.iter().enumerate() {
        let names: Vec<String> = (0..size).map(|j| format!("{}f{j}", z[zi])).collect();
        let fiber = nabla(&names, trunc);
        let to_base: Vec<Vec<usize>> = (0..=trunc)
            .map(|n| vec![zi; fiber.level_size(n)])
            .collect();
        total = Some(match total {
            None => (fiber, to_base),
            Some((acc, acc_map)) => {
                let (obj, inl, inr) = coproduct(&acc, &fiber).expect("same truncation");
                let map: Vec<Vec<usize>> = (0..=trunc)
                    .map(|n| {
                        let mut level = vec![0; obj.level_size(n)];
                        for i in 0..acc.level_size(n) {
                            level[inl.apply(n, i)] = acc_map[n][i];
                        }
                        for i in 0..fiber.level_size(n) {
                            level[inr.apply(n, i)] = to_base[n][i];
                        }
                        level
                    })
                    .collect();
                (obj, map)
            }
        });
    }
    let (w, map) = total.expect("z is nonempty");
    TCSetMor::new(w, dz, map).expect("fiberwise-constant map is natural")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presheaf::{find_point_lifts, is_hprop, neg_map, yoneda};
    use rand::SeedableRng;

    #[test]
    fn quotient_collapses_interval_endpoints() {
        let y1 = yoneda(1, 2);
        let c0 = y1.elem_index(0, "0->1:[c0]").unwrap();
        let c1 = y1.elem_index(0, "0->1:[c1]").unwrap();
        let q = quotient(&y1, &[(0, c0, c1)]);
        // the two endpoints merge; the constant paths over them merge too
        assert_eq!(q.level_size(0), 1);
        assert!(q.level_size(1) < y1.level_size(1));
        q.validate().unwrap();
    }

    #[test]
    fn quotient_with_no_pairs_is_isomorphic() {
        let y1 = yoneda(1, 2);
        let q = quotient(&y1, &[]);
        for n in 0..=2 {
            assert_eq!(q.level_size(n), y1.level_size(n));
        }
    }

    #[test]
    fn random_tcsets_validate_and_are_reproducible() {
        let cfg = GenConfig::default();
        let mut a = ChaCha8Rng::seed_from_u64(99);
        let mut b = ChaCha8Rng::seed_from_u64(99);
        for _ in 0..20 {
            let x = random_tcset(&mut a, cfg);
            let y = random_tcset(&mut b, cfg);
            assert_eq!(x, y);
            x.validate().unwrap();
            assert!((0..=cfg.trunc).all(|n| x.level_size(n) <= cfg.max_level));
        }
    }

    #[test]
    fn random_maps_validate() {
        let cfg = GenConfig {
            trunc: 2,
            max_level: 4,
        };
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..10 {
            let y = random_tcset(&mut rng, cfg);
            let f = random_map_into(&mut rng, &y);
            f.validate().unwrap();
            assert_eq!(f.target(), &y);
        }
    }

    #[test]
    fn component_monos_have_point_lifts() {
        let cfg = GenConfig::default();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut nonempty = 0;
        for _ in 0..25 {
            let y = random_tcset(&mut rng, cfg);
            let m = component_mono(&mut rng, &y);
            assert!(m.is_mono());
            let lifts = find_point_lifts(&m).expect("component monos lift points");
            if m.source().total_size() > 0 {
                nonempty += 1;
                let _ = lifts;
            }
        }
        assert!(nonempty > 5, "corpus should not be degenerate");
    }

    #[test]
    fn neg_map_instances_sometimes_lift() {
        // negation images are monos; some of them carry point lifts and
        // can supplement the component corpus
        let cfg = GenConfig {
            trunc: 2,
            max_level: 4,
        };
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        let mut with_lifts = 0;
        for _ in 0..15 {
            let y = random_tcset(&mut rng, cfg);
            let f = random_map_into(&mut rng, &y);
            let m = neg_map(&f).unwrap();
            assert!(m.is_mono());
            if find_point_lifts(&m).is_some() {
                with_lifts += 1;
            }
        }
        assert!(with_lifts > 0);
    }

    #[test]
    fn codiscrete_hprops_over_constant_bases() {
        let z: Vec<String> = vec!["a".into(), "b".into()];
        let f = codiscrete_hprop_over(&z, &[2, 1], 2);
        f.validate().unwrap();
        assert!(is_hprop(&f).unwrap().is_some());
        // empty fiber over b
        let g = codiscrete_hprop_over(&z, &[1, 0], 2);
        assert!(is_hprop(&g).unwrap().is_some());
        assert_eq!(g.source().level_size(0), 1);
    }
}
