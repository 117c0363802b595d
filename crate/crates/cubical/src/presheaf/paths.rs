//! Interval exponentials and path objects. Exponentiating by the interval
//! loses one truncation level: `(X^I)_n = X_{n+1}` via `y[n] x y[1] =
//! y[n+1]`, so path objects and h-proposition checks live at truncation
//! `D - 1`.

use super::{find_section, limits, PresheafError, TCSet, TCSetMor};
use crate::cube::{Coord, CubeMor};

/// The interval exponential `X^{y[1]}` at truncation `D - 1`.
pub fn interval_exponential(x: &TCSet) -> Result<TCSet, PresheafError> {
    let d = x.trunc();
    if d == 0 {
        return Err(PresheafError::TruncationTooSmall { trunc: 0 });
    }
    let levels: Vec<Vec<String>> = (0..d).map(|n| x.level(n + 1).to_vec()).collect();
    TCSet::from_action_fn(d - 1, levels, |s, i| x.act(&s.times_interval(), i))
}

/// Evaluation `X^I -> X` at an endpoint (`Const0` or `Const1`), as a map
/// of truncation `D - 1`.
fn endpoint_eval(x: &TCSet, xi: &TCSet, end: Coord) -> Result<TCSetMor, PresheafError> {
    let d = x.trunc();
    let components: Vec<Vec<usize>> = (0..d)
        .map(|n| {
            let coords: Vec<Coord> = (0..n)
                .map(Coord::Var)
                .chain(std::iter::once(end))
                .collect();
            let e = CubeMor::new(n, n + 1, coords).expect("endpoint inclusion well-formed");
            (0..x.level_size(n + 1)).map(|i| x.act(&e, i)).collect()
        })
        .collect();
    TCSetMor::new(xi.clone(), x.truncate(d - 1), components)
}

/// Constant paths `X -> X^I`, as a map of truncation `D - 1`.
fn const_path(x: &TCSet, xi: &TCSet) -> Result<TCSetMor, PresheafError> {
    let d = x.trunc();
    let components: Vec<Vec<usize>> = (0..d)
        .map(|n| {
            let coords: Vec<Coord> = (0..n).map(Coord::Var).collect();
            let degeneracy = CubeMor::new(n + 1, n, coords).expect("degeneracy well-formed");
            (0..x.level_size(n)).map(|i| x.act(&degeneracy, i)).collect()
        })
        .collect();
    TCSetMor::new(x.truncate(d - 1), xi.clone(), components)
}

/// The path object of `f : X -> Y` over `Y`, with its boundary map to the
/// fiber product `X x_Y X`. Everything lives at truncation `D - 1`.
#[derive(Debug, Clone)]
pub struct PathObject {
    pub path: TCSet,
    /// `Path_Y(X) -> X x_Y X`
    pub boundary: TCSetMor,
    /// The fiber product `X x_Y X` at truncation `D - 1`.
    pub fiber_product: TCSet,
    /// Constant-path section material: the map `X x_Y X` receives the
    /// diagonal from `X`; the constant path over a point lands in `path`.
    pub const_path_into: TCSetMor,
}

pub fn path_object(f: &TCSetMor) -> Result<PathObject, PresheafError> {
    let d = f.source().trunc();
    if d == 0 {
        return Err(PresheafError::TruncationTooSmall { trunc: 0 });
    }
    let (x, y) = (f.source(), f.target());
    let xi = interval_exponential(x)?;
    let yi = interval_exponential(y)?;
    // f^I : X^I -> Y^I is f shifted one level up.
    let fi_components: Vec<Vec<usize>> = (0..d).map(|n| f.components()[n + 1].clone()).collect();
    let fi = TCSetMor::new(xi.clone(), yi.clone(), fi_components)?;
    let const_y = const_path(y, &yi)?;
    let pb = limits::pullback(&fi, &const_y)?;
    // boundary: (gamma, y) |-> (ev0 gamma, ev1 gamma) in X x_Y X
    let ft = f.truncate(d - 1);
    let base = limits::pullback(&ft, &ft)?;
    let ev0 = endpoint_eval(x, &xi, Coord::Const0)?;
    let ev1 = endpoint_eval(x, &xi, Coord::Const1)?;
    let left = TCSetMor::compose(&ev0, &pb.proj_left)?;
    let right = TCSetMor::compose(&ev1, &pb.proj_left)?;
    let boundary = base.induced(&left, &right)?;
    // constant paths: X -> Path_Y(X)
    let const_x = const_path(x, &xi)?;
    let cp = pb.induced(&const_x, &ft)?;
    Ok(PathObject {
        path: pb.object.clone(),
        boundary,
        fiber_product: base.object.clone(),
        const_path_into: cp,
    })
}

/// Searches for a section of the path boundary map, witnessing that `f`
/// is an h-proposition up to the available truncation. `None` means the
/// exhaustive search found no section.
pub fn is_hprop(f: &TCSetMor) -> Result<Option<TCSetMor>, PresheafError> {
    let po = path_object(f)?;
    Ok(find_section(&po.boundary))
}
