//! Overextended ("Ext") diagrams and their subdiagrams.
//!
//! A connected simply-laced diagram `Z` is of Ext type when some vertex `p`
//! leaves an affine diagram `Y = Z \ {p}` with `(δ_Y, α_p) = -1`. Then `p`
//! has a single neighbor `q ∈ Y`, `q` is special (δ-coefficient 1), the
//! finite part is `K̊ = Y \ {q}` and `δ_Y = α_q + θ_K̊`.

use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gcm::{named_diagram, type_name, CatalogEntry, Gcm, CATALOG_MAX_RANK};
use crate::pisystem::{check_pi_system, embed, supported_in, PiSystem};
use crate::roots::{unit, RootSystem};

/// Decomposition of an Ext subdiagram; all indices and vectors are in
/// ambient coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtDecomposition {
    pub vertices: Vec<usize>,
    pub p: usize,
    pub y: Vec<usize>,
    pub q: usize,
    pub finite_part: Vec<usize>,
    pub delta_y: Vec<i64>,
    pub theta: Vec<i64>,
    /// Catalog name of `Z`, e.g. `E8++`.
    pub name: Option<String>,
    /// Catalog name of the finite part.
    pub finite_name: Option<String>,
}

fn simply_laced(g: &Gcm) -> Result<()> {
    if g.is_symmetric() {
        Ok(())
    } else {
        Err(Error::NotSimplyLaced)
    }
}

/// Decomposes the whole diagram `z`.
pub fn ext_decompose(z: &Gcm) -> Result<Option<ExtDecomposition>> {
    simply_laced(z)?;
    let all: Vec<usize> = (0..z.rank()).collect();
    if !z.is_connected_set(&all) {
        return Err(Error::Decomposable);
    }
    decompose_within(z, &all)
}

/// Decomposes the connected subdiagram of `x` on `vs` (sorted).
pub fn decompose_within(x: &Gcm, vs: &[usize]) -> Result<Option<ExtDecomposition>> {
    let n = x.rank();
    let mut found: Option<(usize, Vec<usize>, Vec<i64>)> = None;
    for &p in vs {
        let y: Vec<usize> = vs.iter().copied().filter(|&v| v != p).collect();
        if y.is_empty() || !x.is_affine_subset(&y)? {
            continue;
        }
        let delta = embed(&x.subdiagram(&y)?.null_root()?, &y, n);
        let pair: i64 = y.iter().map(|&j| delta[j] * x.entry(j, p)).sum();
        if pair != -1 {
            continue;
        }
        if let Some((p0, _, _)) = found {
            return Err(Error::AmbiguousExt(p0, p));
        }
        found = Some((p, y, delta));
    }
    let Some((p, y, delta_y)) = found else {
        return Ok(None);
    };
    let nbrs: Vec<usize> = y.iter().copied().filter(|&j| x.entry(p, j) != 0).collect();
    let [q] = nbrs[..] else {
        return Err(Error::Internal("overextended vertex has several neighbors".into()));
    };
    let finite_part: Vec<usize> = y.iter().copied().filter(|&v| v != q).collect();
    let fin = x.subdiagram(&finite_part)?;
    let theta = embed(&fin.highest_root()?, &finite_part, n);
    let mut check = theta.clone();
    check[q] += 1;
    if check != delta_y {
        return Err(Error::Internal("δ_Y ≠ α_q + θ".into()));
    }
    Ok(Some(ExtDecomposition {
        vertices: vs.to_vec(),
        p,
        y,
        q,
        name: type_name(&x.subdiagram(vs)?).map(|t| t.0),
        finite_name: type_name(&fin).map(|t| t.0),
        finite_part,
        delta_y,
        theta,
    }))
}

/// Every connected vertex subset of `x` (each sorted), grouped by least
/// vertex; uses the exclusive-neighborhood extension scheme so each set
/// appears once.
pub fn connected_subsets(x: &Gcm) -> Vec<Vec<usize>> {
    let n = x.rank();
    let mut all: Vec<Vec<usize>> = (0..n).into_par_iter().flat_map_iter(|v| rooted_subsets(x, v)).collect();
    all.sort();
    all
}

fn rooted_subsets(x: &Gcm, v: usize) -> Vec<Vec<usize>> {
    fn grow(x: &Gcm, v: usize, sub: &mut Vec<usize>, mut ext: Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let mut s = sub.clone();
        s.sort_unstable();
        out.push(s);
        while let Some(w) = ext.pop() {
            let mut next = ext.clone();
            for u in x.neighbors(w) {
                let fresh = u > v
                    && !sub.contains(&u)
                    && !next.contains(&u)
                    && !sub.iter().any(|&s| x.entry(s, u) != 0);
                if fresh {
                    next.push(u);
                }
            }
            sub.push(w);
            grow(x, v, sub, next, out);
            sub.pop();
        }
    }
    let mut out = Vec::new();
    let ext: Vec<usize> = x.neighbors(v).filter(|&u| u > v).collect();
    grow(x, v, &mut vec![v], ext, &mut out);
    out
}

/// All Ext subdiagrams of `x`, sorted by vertex set.
pub fn ext_subdiagrams(x: &Gcm) -> Result<Vec<ExtDecomposition>> {
    ext_subdiagrams_capped(x, CATALOG_MAX_RANK)
}

pub fn ext_subdiagrams_capped(x: &Gcm, cap: usize) -> Result<Vec<ExtDecomposition>> {
    if x.rank() > cap {
        return Err(Error::RankCapExceeded { rank: x.rank(), cap });
    }
    simply_laced(x)?;
    let d = x.symmetrize()?;
    let candidates: Vec<Vec<usize>> = connected_subsets(x)
        .into_iter()
        .filter(|s| s.len() >= 3)
        // Ext diagrams are indefinite; skip finite and affine sets cheaply
        .filter(|s| matches!(x.component_class(s, &d.0, false), crate::gcm::GcmClass::Indefinite { .. }))
        .collect();
    let mut found: Vec<ExtDecomposition> = candidates
        .par_iter()
        .map(|s| decompose_within(x, s))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    found.sort_by(|a, b| a.vertices.cmp(&b.vertices));
    Ok(found)
}

/// `π(Z) = {θ_K̊, δ_Y − θ_K̊, α_p}` for the Ext subdiagram on `z`.
pub fn canonical_pi(rs: &Arc<RootSystem>, z: &[usize]) -> Result<PiSystem> {
    let dec = decompose_sub(rs, z)?;
    pi_of(rs, &dec)
}

pub(crate) fn pi_of(rs: &Arc<RootSystem>, dec: &ExtDecomposition) -> Result<PiSystem> {
    let n = rs.rank();
    let dmt: Vec<i64> = dec.delta_y.iter().zip(&dec.theta).map(|(a, b)| a - b).collect();
    check_pi_system(vec![dec.theta.clone(), dmt, unit(n, dec.p)], rs)
}

fn decompose_sub(rs: &Arc<RootSystem>, z: &[usize]) -> Result<ExtDecomposition> {
    simply_laced(rs.gcm())?;
    let mut z = z.to_vec();
    z.sort_unstable();
    z.dedup();
    if let Some(&v) = z.iter().find(|&&v| v >= rs.rank()) {
        return Err(Error::IndexOutOfRange(v, rs.rank()));
    }
    if !rs.gcm().is_connected_set(&z) {
        return Err(Error::NotExt);
    }
    decompose_within(rs.gcm(), &z)?.ok_or(Error::NotExt)
}

/// `π(Z, Σ̊) = Σ̊ ∪ {δ_Y − θ_Σ̊, α_p}` for a π-system `Σ̊` (ambient
/// coordinates) inside the finite part of `Z`; `θ_Σ̊` is the image of the
/// highest root of the type of `Σ̊`.
pub fn canonical_pi_general(rs: &Arc<RootSystem>, z: &[usize], finite: &[Vec<i64>]) -> Result<PiSystem> {
    let dec = decompose_sub(rs, z)?;
    pi_general_of(rs, &dec, finite)
}

pub(crate) fn pi_general_of(rs: &Arc<RootSystem>, dec: &ExtDecomposition, finite: &[Vec<i64>]) -> Result<PiSystem> {
    if let Some(i) = finite.iter().position(|r| r.len() != rs.rank() || !supported_in(r, &dec.finite_part)) {
        return Err(Error::NotInFinitePart(i));
    }
    let inner = check_pi_system(finite.to_vec(), rs)?;
    let theta_inner = inner.type_matrix().highest_root()?;
    let theta_s = inner.q_sigma(&theta_inner)?;
    let mut roots = finite.to_vec();
    roots.push(dec.delta_y.iter().zip(&theta_s).map(|(a, b)| a - b).collect());
    roots.push(unit(rs.rank(), dec.p));
    check_pi_system(roots, rs)
}

/// The simply-laced hyperbolic catalog: Ext hyperbolics, then the eight
/// diagrams without Ext subdiagrams. The rank-2 family is
/// [`crate::gcm::rank2_hyperbolic`].
pub fn hyperbolic_sl_catalog() -> Vec<CatalogEntry> {
    let mut names: Vec<(String, bool)> = Vec::new();
    names.extend((1..=7).map(|n| (format!("A{n}++"), true)));
    names.extend((4..=8).map(|n| (format!("D{n}++"), true)));
    names.extend((6..=8).map(|n| (format!("E{n}++"), true)));
    names.extend((1..=crate::gcm::FIG2_COUNT).map(|k| (format!("hyp:fig2:{k}"), false)));
    names
        .into_iter()
        .map(|(name, is_ext)| CatalogEntry { gcm: named_diagram(&name).expect("catalog name"), name, is_ext })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(name: &str) -> Gcm {
        named_diagram(name).unwrap()
    }

    #[test]
    fn decompose_e10() {
        let d = ext_decompose(&g("E10")).unwrap().unwrap();
        assert_eq!((d.p, d.q), (9, 8));
        assert_eq!(d.finite_part, (0..8).collect::<Vec<_>>());
        assert_eq!(d.name.as_deref(), Some("E8++"));
        assert_eq!(d.finite_name.as_deref(), Some("E8"));
    }

    #[test]
    fn decompose_d8pp_picks_the_right_deletion() {
        let z = g("D8++");
        let d = ext_decompose(&z).unwrap().unwrap();
        assert_eq!(d.p, 9);
        assert_eq!(d.finite_name.as_deref(), Some("D8"));
        // deleting a fork leaf leaves E8~, whose pairing with that leaf is -2
        let other: Vec<usize> = (0..10).filter(|&v| v != 6).collect();
        assert!(z.is_affine_subset(&other).unwrap());
        assert_eq!(type_name(&z.subdiagram(&other).unwrap()).unwrap().0, "E8~");
    }

    #[test]
    fn fig2_has_no_ext() {
        for k in 1..=8 {
            let x = g(&format!("hyp:fig2:{k}"));
            assert!(x.classify().unwrap().is_hyperbolic(), "fig2:{k}");
            assert_eq!(ext_decompose(&x).unwrap(), None);
            assert!(ext_subdiagrams(&x).unwrap().is_empty());
        }
    }

    #[test]
    fn subdiagram_counts() {
        assert_eq!(ext_subdiagrams(&g("E10")).unwrap().len(), 1);
        let a8 = ext_subdiagrams(&g("A8++")).unwrap();
        let mut names: Vec<_> = a8.iter().map(|d| d.name.clone().unwrap()).collect();
        names.sort();
        assert_eq!(names, vec!["A8++", "E7++", "E7++"]);
        let d10 = ext_subdiagrams(&g("D10++")).unwrap();
        let mut names: Vec<_> = d10.iter().map(|d| d.name.clone().unwrap()).collect();
        names.sort();
        assert_eq!(names, vec!["D10++", "E8++"]);
    }

    #[test]
    fn connected_subset_counts() {
        // a path on n vertices has n(n+1)/2 connected subsets
        assert_eq!(connected_subsets(&g("A6")).len(), 21);
        // D4: 4 singletons, 3 edges, 3 two-leaf paths, the whole diagram
        assert_eq!(connected_subsets(&g("D4")).len(), 4 + 3 + 3 + 1);
        // K4 (fig2:5): every nonempty subset is connected
        assert_eq!(connected_subsets(&g("hyp:fig2:5")).len(), 15);
    }

    #[test]
    fn canonical_pi_examples() {
        let rs = Arc::new(RootSystem::new(g("A1++")).unwrap());
        let pi = canonical_pi(&rs, &[0, 1, 2]).unwrap();
        assert_eq!(pi.roots(), &[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        let rs = Arc::new(RootSystem::new(g("E10")).unwrap());
        let pi = canonical_pi(&rs, &(0..10).collect::<Vec<_>>()).unwrap();
        assert_eq!(pi.roots()[0].iter().sum::<i64>(), 29);
        assert_eq!(pi.type_matrix(), &g("A1++"));
        assert_eq!(canonical_pi(&rs, &[0, 2, 3]), Err(Error::NotExt));
    }

    #[test]
    fn canonical_pi_general_examples() {
        let rs = Arc::new(RootSystem::new(g("E10")).unwrap());
        let z: Vec<usize> = (0..10).collect();
        let simple: Vec<Vec<i64>> = (0..8).map(|i| unit(10, i)).collect();
        let s = canonical_pi_general(&rs, &z, &simple).unwrap();
        assert_eq!(s.type_matrix(), &g("E10"));
        let dec = ext_decompose(&g("E10")).unwrap().unwrap();
        let s = canonical_pi_general(&rs, &z, std::slice::from_ref(&dec.theta)).unwrap();
        assert_eq!(s, canonical_pi(&rs, &z).unwrap());
        assert_eq!(canonical_pi_general(&rs, &z, &[unit(10, 8)]), Err(Error::NotInFinitePart(0)));
    }

    #[test]
    fn catalog_ext_flags() {
        let cat = hyperbolic_sl_catalog();
        assert_eq!(cat.iter().filter(|e| e.is_ext).count(), 15);
        for e in &cat {
            assert!(e.gcm.classify().unwrap().is_hyperbolic(), "{}", e.name);
            assert_eq!(ext_decompose(&e.gcm).unwrap().is_some(), e.is_ext, "{}", e.name);
        }
        assert!(cat.iter().any(|e| e.name == "A1++" && e.is_ext));
    }
}
