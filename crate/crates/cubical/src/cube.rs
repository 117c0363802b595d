//! The cartesian cube category: the Lawvere theory on one generator `I`
//! with two point constants.
//!
//! Objects are the powers `[n] = I^n`, identified with their dimension.
//! A morphism `[m] -> [n]` is a tuple of `n` terms in `m` variables,
//! where each term is one of the constants `0`, `1` or a variable.
//! Composition is substitution. All hom-sets are finite: there are
//! `(m + 2)^n` morphisms `[m] -> [n]`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// One coordinate of a cube morphism: a term in `m` variables.
///
/// The ordering `Const0 < Const1 < Var(0) < Var(1) < ...` is the canonical
/// enumeration order and is relied on for reproducibility.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Coord {
    Const0,
    Const1,
    Var(usize),
}

impl fmt::Display for Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coord::Const0 => write!(f, "c0"),
            Coord::Const1 => write!(f, "c1"),
            Coord::Var(i) => write!(f, "v{i}"),
        }
    }
}

/// A morphism `[dom] -> [cod]` of the cube category.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CubeMor {
    dom: usize,
    cod: usize,
    coords: Vec<Coord>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CubeError {
    #[error("coordinate count {got} does not match codomain dimension {cod}")]
    CoordCount { got: usize, cod: usize },
    #[error("variable index {var} out of range for domain dimension {dom}")]
    VarRange { var: usize, dom: usize },
    #[error("cannot compose: inner codomain {inner_cod} != outer domain {outer_dom}")]
    ComposeMismatch { inner_cod: usize, outer_dom: usize },
    #[error("malformed morphism string: {0}")]
    Parse(String),
}

impl CubeMor {
    pub fn new(dom: usize, cod: usize, coords: Vec<Coord>) -> Result<Self, CubeError> {
        if coords.len() != cod {
            return Err(CubeError::CoordCount {
                got: coords.len(),
                cod,
            });
        }
        for c in &coords {
            if let Coord::Var(i) = c {
                if *i >= dom {
                    return Err(CubeError::VarRange { var: *i, dom });
                }
            }
        }
        Ok(CubeMor { dom, cod, coords })
    }

    pub fn identity(n: usize) -> Self {
        CubeMor {
            dom: n,
            cod: n,
            coords: (0..n).map(Coord::Var).collect(),
        }
    }

    /// The unique morphism `[n] -> [0]`.
    pub fn terminal(n: usize) -> Self {
        CubeMor {
            dom: n,
            cod: 0,
            coords: Vec::new(),
        }
    }

    /// The chosen point `delta = Const0 : [0] -> [1]`.
    pub fn delta() -> Self {
        CubeMor {
            dom: 0,
            cod: 1,
            coords: vec![Coord::Const0],
        }
    }

    pub fn dom(&self) -> usize {
        self.dom
    }

    pub fn cod(&self) -> usize {
        self.cod
    }

    pub fn coords(&self) -> &[Coord] {
        &self.coords
    }

    pub fn is_identity(&self) -> bool {
        self.dom == self.cod
            && self
                .coords
                .iter()
                .enumerate()
                .all(|(j, c)| *c == Coord::Var(j))
    }

    /// Composition `g . f` by substituting the coordinates of `f` into the
    /// variables of `g`. Requires `f.cod == g.dom`.
    pub fn compose(g: &CubeMor, f: &CubeMor) -> Result<CubeMor, CubeError> {
        if f.cod != g.dom {
            return Err(CubeError::ComposeMismatch {
                inner_cod: f.cod,
                outer_dom: g.dom,
            });
        }
        let coords = g
            .coords
            .iter()
            .map(|c| match c {
                Coord::Var(i) => f.coords[*i],
                k => *k,
            })
            .collect();
        Ok(CubeMor {
            dom: f.dom,
            cod: g.cod,
            coords,
        })
    }

    /// The product `self x id_[1] : [dom+1] -> [cod+1]`, adding a fresh
    /// interval variable in the last coordinate.
    pub fn times_interval(&self) -> CubeMor {
        let mut coords = self.coords.clone();
        coords.push(Coord::Var(self.dom));
        CubeMor {
            dom: self.dom + 1,
            cod: self.cod + 1,
            coords,
        }
    }

    /// The pairing `<self, other> : [m] -> [n + k]` of two morphisms with a
    /// common domain, witnessing `Hom(m, n+k) = Hom(m, n) x Hom(m, k)`.
    pub fn pair(&self, other: &CubeMor) -> Result<CubeMor, CubeError> {
        if self.dom != other.dom {
            return Err(CubeError::ComposeMismatch {
                inner_cod: other.dom,
                outer_dom: self.dom,
            });
        }
        let mut coords = self.coords.clone();
        coords.extend_from_slice(&other.coords);
        Ok(CubeMor {
            dom: self.dom,
            cod: self.cod + other.cod,
            coords,
        })
    }

    /// Splits a morphism into `[m] -> [n]` and `[m] -> [k]` components,
    /// inverse to [`CubeMor::pair`].
    pub fn split(&self, n: usize) -> (CubeMor, CubeMor) {
        assert!(n <= self.cod);
        let left = CubeMor {
            dom: self.dom,
            cod: n,
            coords: self.coords[..n].to_vec(),
        };
        let right = CubeMor {
            dom: self.dom,
            cod: self.cod - n,
            coords: self.coords[n..].to_vec(),
        };
        (left, right)
    }
}

/// All morphisms `[m] -> [n]`, in lexicographic order on coordinates with
/// `Const0 < Const1 < Var(0) < ...`. There are `(m + 2)^n` of them.
pub fn enum_homs(m: usize, n: usize) -> Vec<CubeMor> {
    let mut terms = vec![Coord::Const0, Coord::Const1];
    terms.extend((0..m).map(Coord::Var));
    let mut out = Vec::with_capacity(terms.len().pow(n as u32));
    let mut coords = vec![Coord::Const0; n];
    fn rec(terms: &[Coord], coords: &mut Vec<Coord>, j: usize, m: usize, out: &mut Vec<CubeMor>) {
        if j == coords.len() {
            out.push(CubeMor {
                dom: m,
                cod: coords.len(),
                coords: coords.clone(),
            });
            return;
        }
        for t in terms {
            coords[j] = *t;
            rec(terms, coords, j + 1, m, out);
        }
    }
    rec(&terms, &mut coords, 0, m, &mut out);
    out
}

/// All global sections `[0] -> [n]`; there are `2^n` and the list is never
/// empty.
pub fn points(n: usize) -> Vec<CubeMor> {
    enum_homs(0, n)
}

impl fmt::Display for CubeMor {
    /// Prints in the interchange syntax, e.g. `2->3:[v0,c1,v0]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}->{}:[", self.dom, self.cod)?;
        for (j, c) in self.coords.iter().enumerate() {
            if j > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

impl FromStr for CubeMor {
    type Err = CubeError;

    fn from_str(s: &str) -> Result<Self, CubeError> {
        let err = || CubeError::Parse(s.to_string());
        let (dims, body) = s.split_once(':').ok_or_else(err)?;
        let (dom, cod) = dims.split_once("->").ok_or_else(err)?;
        let dom: usize = dom.trim().parse().map_err(|_| err())?;
        let cod: usize = cod.trim().parse().map_err(|_| err())?;
        let body = body.trim();
        let inner = body
            .strip_prefix('[')
            .and_then(|b| b.strip_suffix(']'))
            .ok_or_else(err)?;
        let mut coords = Vec::new();
        if !inner.is_empty() {
            for tok in inner.split(',') {
                let tok = tok.trim();
                let c = match tok {
                    "c0" => Coord::Const0,
                    "c1" => Coord::Const1,
                    _ => {
                        let i = tok.strip_prefix('v').ok_or_else(err)?;
                        Coord::Var(i.parse().map_err(|_| err())?)
                    }
                };
                coords.push(c);
            }
        }
        CubeMor::new(dom, cod, coords)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn identity_laws() {
        for f in enum_homs(1, 2) {
            assert_eq!(CubeMor::compose(&CubeMor::identity(2), &f).unwrap(), f);
            assert_eq!(CubeMor::compose(&f, &CubeMor::identity(1)).unwrap(), f);
        }
    }

    #[test]
    fn diagonal_after_point() {
        let diag = CubeMor::new(1, 2, vec![Coord::Var(0), Coord::Var(0)]).unwrap();
        let one = CubeMor::new(0, 1, vec![Coord::Const1]).unwrap();
        let got = CubeMor::compose(&diag, &one).unwrap();
        assert_eq!(
            got,
            CubeMor::new(0, 2, vec![Coord::Const1, Coord::Const1]).unwrap()
        );
    }

    #[test]
    fn associativity_exhaustive_small() {
        // All triples [0] -> [1] -> [1] -> [1].
        for f in enum_homs(0, 1) {
            for g in enum_homs(1, 1) {
                for h in enum_homs(1, 1) {
                    let gf = CubeMor::compose(&g, &f).unwrap();
                    let hg = CubeMor::compose(&h, &g).unwrap();
                    assert_eq!(
                        CubeMor::compose(&h, &gf).unwrap(),
                        CubeMor::compose(&hg, &f).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn hom_counts() {
        assert_eq!(enum_homs(0, 0).len(), 1);
        assert_eq!(enum_homs(1, 1).len(), 3);
        assert_eq!(enum_homs(2, 2).len(), 16);
        for m in 0..=4 {
            for n in 0..=4 {
                assert_eq!(enum_homs(m, n).len(), (m + 2).pow(n as u32));
            }
        }
    }

    #[test]
    fn terminal_object() {
        for m in 0..=4 {
            assert_eq!(enum_homs(m, 0).len(), 1);
        }
    }

    #[test]
    fn points_counts() {
        assert_eq!(points(0).len(), 1);
        assert_eq!(
            points(1),
            vec![
                CubeMor::new(0, 1, vec![Coord::Const0]).unwrap(),
                CubeMor::new(0, 1, vec![Coord::Const1]).unwrap()
            ]
        );
        assert_eq!(points(3).len(), 8);
        assert!(!points(4).is_empty());
    }

    #[test]
    fn point_factorization() {
        // Every s : [0] -> [n+1] factors as ([n] x d) . s' with d : [0] -> [1].
        for n in 0..=3 {
            for s in points(n + 1) {
                let (s_prime, d) = s.split(n);
                assert_eq!(d.cod(), 1);
                let lifted = s_prime.pair(&d).unwrap();
                assert_eq!(lifted, s);
                // and the pairing is ([n] x d) . s' on the nose: d's coordinate
                // is a constant, so [n] x d is id coords followed by it.
                let d_coord = d.coords()[0];
                let nd_coords: Vec<Coord> =
                    (0..n).map(Coord::Var).chain(std::iter::once(d_coord)).collect();
                let nd = CubeMor::new(n, n + 1, nd_coords).unwrap();
                assert_eq!(CubeMor::compose(&nd, &s_prime).unwrap(), s);
            }
        }
    }

    #[test]
    fn product_law_bijection() {
        for m in 0..=2 {
            for n in 0..=2 {
                for k in 0..=2 {
                    let whole = enum_homs(m, n + k);
                    let mut reassembled: Vec<CubeMor> = Vec::new();
                    for f in enum_homs(m, n) {
                        for g in enum_homs(m, k) {
                            reassembled.push(f.pair(&g).unwrap());
                        }
                    }
                    reassembled.sort();
                    let mut whole_sorted = whole.clone();
                    whole_sorted.sort();
                    assert_eq!(whole_sorted, reassembled);
                    for h in &whole {
                        let (a, b) = h.split(n);
                        assert_eq!(a.pair(&b).unwrap(), *h);
                    }
                }
            }
        }
    }

    #[test]
    fn compose_dimension_mismatch() {
        let f = CubeMor::identity(2);
        let g = CubeMor::identity(3);
        assert!(matches!(
            CubeMor::compose(&g, &f),
            Err(CubeError::ComposeMismatch { .. })
        ));
    }

    fn arb_mor(max_dim: usize) -> impl Strategy<Value = CubeMor> {
        (0..=max_dim, 0..=max_dim).prop_flat_map(|(m, n)| {
            let homs = enum_homs(m, n);
            let len = homs.len();
            (0..len).prop_map(move |i| homs[i].clone())
        })
    }

    proptest! {
        #[test]
        fn print_parse_roundtrip(f in arb_mor(3)) {
            let s = f.to_string();
            let back: CubeMor = s.parse().unwrap();
            prop_assert_eq!(back, f);
        }

        #[test]
        fn composition_associative(m in 0usize..=2, n in 0usize..=2, k in 0usize..=2, l in 0usize..=2, seed in any::<u64>()) {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let pick = |homs: Vec<CubeMor>, rng: &mut rand_chacha::ChaCha8Rng| {
                let i = rng.gen_range(0..homs.len());
                homs[i].clone()
            };
            let f = pick(enum_homs(m, n), &mut rng);
            let g = pick(enum_homs(n, k), &mut rng);
            let h = pick(enum_homs(k, l), &mut rng);
            let lhs = CubeMor::compose(&h, &CubeMor::compose(&g, &f).unwrap()).unwrap();
            let rhs = CubeMor::compose(&CubeMor::compose(&h, &g).unwrap(), &f).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
