//! The Yoneda embedding and the adjoint triple between sets and truncated
//! cubical sets: constant presheaves, global sections, and the codiscrete
//! functor, together with the relative codiscrete construction used for
//! de-truncating sections over a constant base.

use super::{find_section, search_natural_maps, PresheafError, TCSet, TCSetMor};
use crate::cube::{enum_homs, points, CubeMor};

/// The representable presheaf `y[n]`, truncated at dimension `trunc`.
/// Level `m` is the hom-set `[m] -> [n]`; the action is precomposition.
pub fn yoneda(n: usize, trunc: usize) -> TCSet {
    let homs: Vec<Vec<CubeMor>> = (0..=trunc).map(|m| enum_homs(m, n)).collect();
    let levels: Vec<Vec<String>> = homs
        .iter()
        .map(|hs| hs.iter().map(|h| h.to_string()).collect())
        .collect();
    TCSet::from_action_fn(trunc, levels, |s, i| {
        let h = &homs[s.cod()][i];
        let hs = CubeMor::compose(h, s).expect("precomposition well-typed");
        homs[s.dom()]
            .iter()
            .position(|k| *k == hs)
            .expect("hom enumeration is exhaustive")
    })
    .expect("yoneda is functorial")
}

/// The constant presheaf on a finite set: all levels are `z`, all actions
/// are identities.
pub fn delta_const(z: &[String], trunc: usize) -> TCSet {
    let levels = vec![z.to_vec(); trunc + 1];
    TCSet::from_action_fn(trunc, levels, |_, i| i).expect("constant presheaf is functorial")
}

/// Global sections: evaluation at level 0, since `1 = y[0]`.
pub fn gamma(x: &TCSet) -> Vec<String> {
    x.level(0).to_vec()
}

/// Index of a function `points(n) -> Z` (given as value indices in point
/// enumeration order) in the canonical level ordering of `nabla`.
pub fn nabla_index(z_count: usize, h: &[usize]) -> usize {
    h.iter().fold(0, |acc, &v| acc * z_count + v)
}

fn nabla_fun(z_count: usize, point_count: usize, mut idx: usize) -> Vec<usize> {
    let mut h = vec![0; point_count];
    for k in (0..point_count).rev() {
        h[k] = idx % z_count;
        idx /= z_count;
    }
    h
}

fn nabla_name(z: &[String], h: &[usize]) -> String {
    let parts: Vec<&str> = h.iter().map(|&v| z[v].as_str()).collect();
    format!("[{}]", parts.join(","))
}

/// The codiscrete presheaf on a finite set: level `n` is the set of all
/// functions `points(n) -> Z`, with `s : [m] -> [n]` acting by
/// `h |-> (p |-> h(s . p))`.
pub fn nabla(z: &[String], trunc: usize) -> TCSet {
    let pts: Vec<Vec<CubeMor>> = (0..=trunc).map(points).collect();
    let zc = z.len();
    let levels: Vec<Vec<String>> = (0..=trunc)
        .map(|n| {
            let count = zc.checked_pow(pts[n].len() as u32).unwrap_or(0);
            (0..count)
                .map(|i| nabla_name(z, &nabla_fun(zc, pts[n].len(), i)))
                .collect()
        })
        .collect();
    TCSet::from_action_fn(trunc, levels, |s, i| {
        let h = nabla_fun(zc, pts[s.cod()].len(), i);
        let restricted: Vec<usize> = pts[s.dom()]
            .iter()
            .map(|p| {
                let sp = CubeMor::compose(s, p).expect("point composition well-typed");
                let k = pts[s.cod()]
                    .iter()
                    .position(|q| *q == sp)
                    .expect("points enumeration is exhaustive");
                h[k]
            })
            .collect();
        nabla_index(zc, &restricted)
    })
    .expect("codiscrete presheaf is functorial")
}

/// The transpose of a function `g : Z -> X_0` along `Delta -| Gamma`:
/// the constant-to-`X` map with `f_n = X_! . g` for `! : [n] -> [0]`.
pub fn delta_transpose(z: &[String], x: &TCSet, g: &[usize]) -> Result<TCSetMor, PresheafError> {
    let dz = delta_const(z, x.trunc());
    let components: Vec<Vec<usize>> = (0..=x.trunc())
        .map(|n| {
            let t = CubeMor::terminal(n);
            g.iter().map(|&i| x.act(&t, i)).collect()
        })
        .collect();
    TCSetMor::new(dz, x.clone(), components)
}

/// The transpose of a function `g : X_0 -> Z` along `Gamma -| Nabla`:
/// `f_n(x) = (p |-> g(X_p(x)))`.
pub fn nabla_transpose(x: &TCSet, z: &[String], g: &[usize]) -> Result<TCSetMor, PresheafError> {
    let nz = nabla(z, x.trunc());
    let zc = z.len();
    let components: Vec<Vec<usize>> = (0..=x.trunc())
        .map(|n| {
            let pts = points(n);
            (0..x.level_size(n))
                .map(|i| {
                    let h: Vec<usize> = pts.iter().map(|p| g[x.act(p, i)]).collect();
                    nabla_index(zc, &h)
                })
                .collect()
        })
        .collect();
    TCSetMor::new(x.clone(), nz, components)
}

/// Enumerates all natural maps `X -> Y`.
pub fn enum_natural_maps(x: &TCSet, y: &TCSet) -> Vec<TCSetMor> {
    search_natural_maps(x, y, &|n, _| (0..y.level_size(n)).collect(), None)
}

/// The relative codiscrete object over a constant base: the pullback of
/// `Nabla Gamma W -> Nabla Z` along the canonical `Delta Z -> Nabla Z`,
/// with its projection and the canonical comparison map from `W`.
#[derive(Debug, Clone)]
pub struct NablaRel {
    pub object: TCSet,
    /// Projection to the constant presheaf on `Z`.
    pub proj: TCSetMor,
    /// The canonical map `W -> Nabla_Z Gamma W` from the unit of the
    /// adjunction.
    pub unit: TCSetMor,
    /// Decoded element data per level: `(z index, fiber values over points)`.
    elems: Vec<Vec<(usize, Vec<usize>)>>,
    z: Vec<String>,
}

/// Builds the relative codiscrete object for `f : W -> Delta Z`. The
/// target of `f` must be the constant presheaf on `z`.
pub fn nabla_rel(z: &[String], f: &TCSetMor) -> Result<NablaRel, PresheafError> {
    let w = f.source();
    let trunc = w.trunc();
    let dz = delta_const(z, trunc);
    if *f.target() != dz {
        return Err(PresheafError::Other(
            "nabla_rel: target of f is not the constant presheaf on z".to_string(),
        ));
    }
    let fibers: Vec<Vec<usize>> = (0..z.len())
        .map(|zi| {
            (0..w.level_size(0))
                .filter(|&i| f.apply(0, i) == zi)
                .collect()
        })
        .collect();
    let pts: Vec<Vec<CubeMor>> = (0..=trunc).map(points).collect();
    // Level n: pairs (z, h) with h : points(n) -> fiber of z in W_0.
    let mut elems: Vec<Vec<(usize, Vec<usize>)>> = Vec::with_capacity(trunc + 1);
    for pn in pts.iter().take(trunc + 1) {
        let mut level = Vec::new();
        for (zi, fiber) in fibers.iter().enumerate() {
            let mut h = vec![0usize; pn.len()];
            if fiber.is_empty() {
                continue;
            }
            loop {
                level.push((zi, h.iter().map(|&k| fiber[k]).collect::<Vec<usize>>()));
                // increment h as a mixed-radix counter over the fiber
                let mut k = pn.len();
                loop {
                    if k == 0 {
                        break;
                    }
                    k -= 1;
                    h[k] += 1;
                    if h[k] < fiber.len() {
                        break;
                    }
                    h[k] = 0;
                }
                if h.iter().all(|&v| v == 0) {
                    break;
                }
            }
        }
        elems.push(level);
    }
    let names: Vec<Vec<String>> = elems
        .iter()
        .map(|level| {
            level
                .iter()
                .map(|(zi, h)| {
                    let parts: Vec<&str> = h.iter().map(|&i| w.elem_name(0, i)).collect();
                    format!("{}|[{}]", z[*zi], parts.join(","))
                })
                .collect()
        })
        .collect();
    let elems_for_action = elems.clone();
    let object = TCSet::from_action_fn(trunc, names, |s, i| {
        let (zi, h) = &elems_for_action[s.cod()][i];
        let restricted: Vec<usize> = pts[s.dom()]
            .iter()
            .map(|p| {
                let sp = CubeMor::compose(s, p).expect("point composition well-typed");
                let k = pts[s.cod()]
                    .iter()
                    .position(|q| *q == sp)
                    .expect("points enumeration is exhaustive");
                h[k]
            })
            .collect();
        elems_for_action[s.dom()]
            .iter()
            .position(|(zj, g)| zj == zi && *g == restricted)
            .expect("restriction stays in the same fiber")
    })?;
    let proj_components: Vec<Vec<usize>> = elems
        .iter()
        .map(|level| level.iter().map(|(zi, _)| *zi).collect())
        .collect();
    let proj = TCSetMor::new(object.clone(), dz, proj_components)?;
    let unit_components: Vec<Vec<usize>> = (0..=trunc)
        .map(|n| {
            (0..w.level_size(n))
                .map(|i| {
                    let zi = f.apply(n, i);
                    let h: Vec<usize> = pts[n].iter().map(|p| w.act(p, i)).collect();
                    elems[n]
                        .iter()
                        .position(|(zj, g)| *zj == zi && *g == h)
                        .expect("unit lands in the relative codiscrete object")
                })
                .collect()
        })
        .collect();
    let unit = TCSetMor::new(w.clone(), object.clone(), unit_components)?;
    Ok(NablaRel {
        object,
        proj,
        unit,
        elems,
        z: z.to_vec(),
    })
}

impl NablaRel {
    /// Decodes a level-0 element into its `(z, w)` pair: level 0 functions
    /// have a single point, so they are just a choice of fiber element.
    pub fn decode_level0(&self, i: usize) -> (usize, usize) {
        let (zi, h) = &self.elems[0][i];
        (*zi, h[0])
    }

    pub fn z(&self) -> &[String] {
        &self.z
    }

    /// Searches for a section of the projection to the constant base.
    pub fn find_proj_section(&self) -> Option<TCSetMor> {
        find_section(&self.proj)
    }
}

/// Extracts a section of `Gamma W -> Z` from a section of the projection
/// `Nabla_Z Gamma W -> Delta Z`: the function sending each `z` to the
/// `Gamma W` component of the section's value at level 0.
pub fn gamma_section_transfer(
    rel: &NablaRel,
    f: &TCSetMor,
    section: &TCSetMor,
) -> Result<Vec<usize>, PresheafError> {
    // section must be a verified section of rel.proj
    let comp = TCSetMor::compose(&rel.proj, section)?;
    if comp != TCSetMor::identity(f.target()) {
        return Err(PresheafError::Other(
            "gamma_section_transfer: not a section of the projection".to_string(),
        ));
    }
    let mut out = Vec::with_capacity(rel.z.len());
    for zi in 0..rel.z.len() {
        let (zj, w0) = rel.decode_level0(section.apply(0, zi));
        if zj != zi {
            return Err(PresheafError::Other(
                "gamma_section_transfer: section leaves its fiber".to_string(),
            ));
        }
        // roundtrip: Gamma f . result = id on Z
        if f.apply(0, w0) != zi {
            return Err(PresheafError::Other(
                "gamma_section_transfer: extracted point is not over z".to_string(),
            ));
        }
        out.push(w0);
    }
    Ok(out)
}
