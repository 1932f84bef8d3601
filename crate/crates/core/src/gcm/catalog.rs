//! Named diagrams.
//!
//! Grammar: `X<n>` finite, `X<n>~` (or `X<n>+`) untwisted affine,
//! `X<n>++` overextended, `X<n>+++` very-extended, the aliases `E9`, `E10`,
//! `E11`, `hyp:fig2:<k>` for the eight simply-laced hyperbolics that are not
//! overextensions, and `hyp:rank2:<a>` for `[[2,-a],[-a,2]]`, `a >= 3`.
//!
//! Vertex numbering is fixed: the finite part in Bourbaki order, then the
//! affine vertex, then the overextended vertex, then the very-extended one.
//! The finite matrices follow `a_ij = <alpha_i^vee, alpha_j>`, so `C2` is
//! `[[2,-2],[-1,2]]`.

use serde::Serialize;

use super::Gcm;
use crate::error::{Error, Result};

/// Largest rank any catalog name may produce.
pub const CATALOG_MAX_RANK: usize = 26;

/// The class a catalog name is declared to have.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NamedClass {
    Finite,
    Affine,
    Hyperbolic,
    Indefinite,
}

#[derive(Debug, Clone, Serialize)]
pub struct CatalogEntry {
    pub name: String,
    pub gcm: Gcm,
    pub is_ext: bool,
}

fn path(n: usize) -> Vec<Vec<i64>> {
    let mut m = vec![vec![0; n]; n];
    for i in 0..n {
        m[i][i] = 2;
        if i + 1 < n {
            m[i][i + 1] = -1;
            m[i + 1][i] = -1;
        }
    }
    m
}

fn link(m: &mut [Vec<i64>], i: usize, j: usize) {
    m[i][j] = -1;
    m[j][i] = -1;
}

fn finite(letter: char, n: usize, name: &str) -> Result<Vec<Vec<i64>>> {
    let out_of_range = || Error::RankOutOfRange(name.to_string());
    let m = match letter {
        'A' if n >= 1 => path(n),
        'B' if n >= 2 => {
            let mut m = path(n);
            m[n - 1][n - 2] = -2;
            m
        }
        'C' if n >= 2 => {
            let mut m = path(n);
            m[n - 2][n - 1] = -2;
            m
        }
        'D' if n >= 4 => {
            let mut m = path(n - 1);
            for r in m.iter_mut() {
                r.push(0);
            }
            m.push(vec![0; n]);
            m[n - 1][n - 1] = 2;
            link(&mut m, n - 3, n - 1);
            m
        }
        'E' if (6..=8).contains(&n) => {
            let mut m = vec![vec![0; n]; n];
            for (i, r) in m.iter_mut().enumerate() {
                r[i] = 2;
            }
            link(&mut m, 0, 2);
            link(&mut m, 1, 3);
            for i in 2..n - 1 {
                link(&mut m, i, i + 1);
            }
            m
        }
        'F' if n == 4 => {
            let mut m = path(4);
            m[2][1] = -2;
            m
        }
        'G' if n == 2 => vec![vec![2, -3], vec![-1, 2]],
        'A' | 'B' | 'C' | 'D' | 'E' | 'F' | 'G' => return Err(out_of_range()),
        _ => return Err(Error::UnknownName(name.to_string())),
    };
    Ok(m)
}

/// Untwisted affinization of an indecomposable finite GCM; the new vertex
/// (for `-theta`) is appended last.
pub fn affinize(f: &Gcm) -> Result<Gcm> {
    let theta = f.highest_root()?;
    let form = f.bilinear_form()?;
    let n = f.rank();
    let theta_norm = form.eval(&theta, &theta);
    let mut m: Vec<Vec<i64>> = f.matrix().iter().map(|r| {
        let mut r = r.clone();
        r.push(0);
        r
    }).collect();
    m.push(vec![0; n + 1]);
    m[n][n] = 2;
    for j in 0..n {
        let e = unit(n, j);
        let tj = form.eval(&theta, &e);
        let jj = form.eval(&e, &e);
        // <alpha_0^vee, alpha_j> = -2(theta, alpha_j)/(theta, theta)
        m[n][j] = i64::try_from(-2 * tj / theta_norm).map_err(|_| Error::Overflow)?;
        m[j][n] = i64::try_from(-2 * tj / jj).map_err(|_| Error::Overflow)?;
    }
    Gcm::new(m)
}

/// Appends a vertex joined by a simple bond to vertex `at`.
pub fn overextend(g: &Gcm, at: usize) -> Result<Gcm> {
    let n = g.rank();
    if at >= n {
        return Err(Error::IndexOutOfRange(at, n));
    }
    let mut m: Vec<Vec<i64>> = g.matrix().iter().map(|r| {
        let mut r = r.clone();
        r.push(0);
        r
    }).collect();
    m.push(vec![0; n + 1]);
    m[n][n] = 2;
    link(&mut m, n, at);
    Gcm::new(m)
}

/// The rank-2 symmetric hyperbolic `[[2,-a],[-a,2]]`.
pub fn rank2_hyperbolic(a: i64) -> Result<Gcm> {
    if a < 3 {
        return Err(Error::RankOutOfRange(format!("hyp:rank2:{a}")));
    }
    Gcm::new(vec![vec![2, -a], vec![-a, 2]])
}

fn unit(n: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

fn edges(n: usize, es: &[(usize, usize, i64)]) -> Vec<Vec<i64>> {
    let mut m = vec![vec![0; n]; n];
    for (i, r) in m.iter_mut().enumerate() {
        r[i] = 2;
    }
    for &(i, j, a) in es {
        m[i][j] = a;
        m[j][i] = a;
    }
    m
}

/// The eight simply-laced hyperbolic diagrams of ranks 3 to 6 that contain
/// no overextended subdiagram.
pub(crate) fn fig2(k: usize) -> Option<Vec<Vec<i64>>> {
    let m = match k {
        1 => edges(3, &[(0, 1, -2), (1, 2, -2)]),
        2 => edges(3, &[(0, 1, -2), (0, 2, -2), (1, 2, -1)]),
        3 => edges(3, &[(0, 1, -2), (0, 2, -2), (1, 2, -2)]),
        4 => edges(3, &[(0, 1, -1), (0, 2, -2), (1, 2, -1)]),
        5 => edges(4, &[(0, 1, -1), (0, 2, -1), (0, 3, -1), (1, 2, -1), (1, 3, -1), (2, 3, -1)]),
        6 => edges(4, &[(0, 1, -1), (0, 2, -1), (0, 3, -1), (1, 2, -1), (2, 3, -1)]),
        7 => edges(5, &[(0, 1, -1), (1, 2, -1), (2, 3, -1), (3, 0, -1), (1, 4, -1), (4, 3, -1)]),
        8 => edges(6, &[(0, 1, -1), (0, 2, -1), (0, 3, -1), (0, 4, -1), (0, 5, -1)]),
        _ => return None,
    };
    Some(m)
}

pub const FIG2_COUNT: usize = 8;

/// Parsed form of a catalog name.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Extension {
    None,
    Affine,
    Over,
    VeryExtended,
}

pub(crate) fn parse_series(name: &str) -> Option<(char, usize, Extension)> {
    let (stem, ext) = if let Some(s) = name.strip_suffix("+++") {
        (s, Extension::VeryExtended)
    } else if let Some(s) = name.strip_suffix("++") {
        (s, Extension::Over)
    } else if let Some(s) = name.strip_suffix('~').or_else(|| name.strip_suffix('+')) {
        (s, Extension::Affine)
    } else {
        (name, Extension::None)
    };
    let mut chars = stem.chars();
    let letter = chars.next()?.to_ascii_uppercase();
    let digits = chars.as_str();
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    Some((letter, digits.parse().ok()?, ext))
}

/// Looks up a diagram by name.
pub fn named_diagram(name: &str) -> Result<Gcm> {
    let name = name.trim();
    let unknown = || Error::UnknownName(name.to_string());
    match name {
        "E9" => return named_diagram("E8~"),
        "E10" => return named_diagram("E8++"),
        "E11" => return named_diagram("E8+++"),
        _ => {}
    }
    if let Some(k) = name.strip_prefix("hyp:fig2:") {
        let k: usize = k.parse().map_err(|_| unknown())?;
        return fig2(k).ok_or_else(|| Error::RankOutOfRange(name.to_string())).and_then(Gcm::new);
    }
    if let Some(a) = name.strip_prefix("hyp:rank2:") {
        let a: i64 = a.parse().map_err(|_| unknown())?;
        return rank2_hyperbolic(a);
    }
    let (letter, n, ext) = parse_series(name).ok_or_else(unknown)?;
    if !"ABCDEFG".contains(letter) {
        return Err(unknown());
    }
    let total = n
        + match ext {
            Extension::None => 0,
            Extension::Affine => 1,
            Extension::Over => 2,
            Extension::VeryExtended => 3,
        };
    if total > CATALOG_MAX_RANK {
        return Err(Error::RankOutOfRange(name.to_string()));
    }
    if matches!(ext, Extension::Over | Extension::VeryExtended) && !"ADE".contains(letter) {
        // non-simply-laced overextensions are not named
        return Err(unknown());
    }
    let base = Gcm::new(finite(letter, n, name)?)?;
    if ext == Extension::None {
        return Ok(base);
    }
    let aff = affinize(&base)?;
    if ext == Extension::Affine {
        return Ok(aff);
    }
    let over = overextend(&aff, n)?;
    if ext == Extension::Over {
        return Ok(over);
    }
    overextend(&over, n + 1)
}

/// Declared class of a catalog name, without computing anything.
pub fn declared_class(name: &str) -> Option<NamedClass> {
    match name {
        "E9" => return Some(NamedClass::Affine),
        "E10" => return Some(NamedClass::Hyperbolic),
        "E11" => return Some(NamedClass::Indefinite),
        _ => {}
    }
    if name.starts_with("hyp:") {
        return Some(NamedClass::Hyperbolic);
    }
    let (letter, n, ext) = parse_series(name)?;
    Some(match ext {
        Extension::None => NamedClass::Finite,
        Extension::Affine => NamedClass::Affine,
        Extension::VeryExtended => NamedClass::Indefinite,
        Extension::Over => {
            let hyp = match letter {
                'A' => n <= 7,
                'D' => n <= 8,
                'E' => true,
                _ => false,
            };
            if hyp {
                NamedClass::Hyperbolic
            } else {
                NamedClass::Indefinite
            }
        }
    })
}

/// Candidate catalog names of a given rank, used for type recognition.
pub(crate) fn names_of_rank(m: usize) -> Vec<String> {
    let mut out = Vec::new();
    let finite_names = |r: usize| -> Vec<String> {
        let mut v = Vec::new();
        if r >= 1 {
            v.push(format!("A{r}"));
        }
        if r >= 2 {
            v.push(format!("B{r}"));
            v.push(format!("C{r}"));
        }
        if r >= 4 {
            v.push(format!("D{r}"));
        }
        if (6..=8).contains(&r) {
            v.push(format!("E{r}"));
        }
        if r == 4 {
            v.push("F4".into());
        }
        if r == 2 {
            v.push("G2".into());
        }
        v
    };
    out.extend(finite_names(m));
    if m >= 2 {
        out.extend(finite_names(m - 1).into_iter().map(|s| format!("{s}~")));
    }
    if m >= 3 {
        out.extend(
            finite_names(m - 2)
                .into_iter()
                .filter(|s| s.starts_with(['A', 'D', 'E']))
                .map(|s| format!("{s}++")),
        );
    }
    if m == 11 {
        out.push("E11".into());
    }
    for k in 1..=FIG2_COUNT {
        if fig2(k).is_some_and(|g| g.len() == m) {
            out.push(format!("hyp:fig2:{k}"));
        }
    }
    out
}

/// Catalog name of `m` with a bijection `σ` such that
/// `named[σi][σj] = m[i][j]`; the first matching candidate wins.
pub fn type_name(m: &Gcm) -> Option<(String, Vec<usize>)> {
    names_of_rank(m.rank()).into_iter().find_map(|name| {
        let g = named_diagram(&name).ok()?;
        super::diagram_isomorphic(m, &g).map(|s| (name, s))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gcm::GcmClass;

    #[test]
    fn a1pp_matrix() {
        let g = named_diagram("A1++").unwrap();
        assert_eq!(g.matrix(), &[vec![2, -2, 0], vec![-2, 2, -1], vec![0, -1, 2]]);
    }

    #[test]
    fn e10_is_e8pp() {
        let e10 = named_diagram("E10").unwrap();
        assert_eq!(e10.rank(), 10);
        assert_eq!(e10, named_diagram("E8++").unwrap());
        // E8~ vertex is joined to alpha_8, overextended vertex to E8~ vertex
        assert_eq!(e10.entry(8, 7), -1);
        assert_eq!(e10.entry(9, 8), -1);
        assert_eq!(e10.neighbors(9).collect::<Vec<_>>(), vec![8]);
    }

    #[test]
    fn fig2_first_entry() {
        let g = named_diagram("hyp:fig2:1").unwrap();
        assert_eq!(g.matrix(), &[vec![2, -2, 0], vec![-2, 2, -2], vec![0, -2, 2]]);
    }

    #[test]
    fn bad_names() {
        assert_eq!(named_diagram("D3++"), Err(Error::RankOutOfRange("D3++".into())));
        assert_eq!(named_diagram("Q5"), Err(Error::UnknownName("Q5".into())));
        assert_eq!(named_diagram("hyp:fig2:9"), Err(Error::RankOutOfRange("hyp:fig2:9".into())));
        assert!(matches!(named_diagram("B3++"), Err(Error::UnknownName(_))));
        assert!(matches!(named_diagram("A30"), Err(Error::RankOutOfRange(_))));
        assert!(matches!(named_diagram("E9++"), Err(Error::RankOutOfRange(_))));
    }

    #[test]
    fn non_simply_laced_affines_are_affine() {
        for name in ["B3~", "C3~", "F4~", "G2~", "C2~", "B2~"] {
            let g = named_diagram(name).unwrap();
            assert!(matches!(g.classify().unwrap().single(), Some(GcmClass::Affine { .. })), "{name}");
        }
        assert_eq!(named_diagram("G2~").unwrap().matrix()[2], vec![0, -1, 2]);
    }

    #[test]
    fn declared_classes() {
        assert_eq!(declared_class("A7++"), Some(NamedClass::Hyperbolic));
        assert_eq!(declared_class("A8++"), Some(NamedClass::Indefinite));
        assert_eq!(declared_class("D9++"), Some(NamedClass::Indefinite));
        assert_eq!(declared_class("hyp:fig2:3"), Some(NamedClass::Hyperbolic));
    }
}
