//! Negation of subobjects, computed in the slice over the ambient object.
//!
//! Two computations are run side by side: the point-restriction form,
//! which only quantifies over global sections of `[n]`, and the direct
//! form quantifying over all morphisms into `[n]`. They must agree; a
//! disagreement would falsify the generalization of the level-0
//! isomorphism `(not X)_0 = not (X_0)` and is reported as an internal
//! invariant error.

use super::{PresheafError, Subobject, TCSetMor};
use crate::cube::{enum_homs, points};

/// The negation of a subobject `A` of `Y`:
/// `(not A)_n = { y in Y_n : Y_p(y) not in A_0 for every point p }`.
pub fn neg_sub(a: &Subobject) -> Result<Subobject, PresheafError> {
    let y = a.ambient();
    let trunc = y.trunc();
    let mut by_points: Vec<Vec<bool>> = Vec::with_capacity(trunc + 1);
    for n in 0..=trunc {
        let pts = points(n);
        let level = (0..y.level_size(n))
            .map(|i| pts.iter().all(|p| !a.contains(0, y.act(p, i))))
            .collect();
        by_points.push(level);
    }
    // direct form: quantify over all s : [m] -> [n]
    for n in 0..=trunc {
        for i in 0..y.level_size(n) {
            let mut direct = true;
            'outer: for m in 0..=trunc {
                for s in enum_homs(m, n) {
                    if a.contains(m, y.act(&s, i)) {
                        direct = false;
                        break 'outer;
                    }
                }
            }
            if direct != by_points[n][i] {
                return Err(PresheafError::NegationDisagreement {
                    level: n,
                    name: y.elem_name(n, i).to_string(),
                });
            }
        }
    }
    Subobject::new(y.clone(), by_points)
}

/// The negation of a map `f : X -> Y`: the subobject inclusion of
/// `not(im f)` into `Y`. Always a monomorphism.
pub fn neg_map(f: &TCSetMor) -> Result<TCSetMor, PresheafError> {
    let a = super::limits::image(f);
    let na = neg_sub(&a)?;
    Ok(na.inclusion())
}

/// The negation of a subobject applied twice.
pub fn double_neg_sub(a: &Subobject) -> Result<Subobject, PresheafError> {
    neg_sub(&neg_sub(a)?)
}
