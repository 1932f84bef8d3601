//! Generalized Cartan matrices and their Dynkin diagrams.
//!
//! A [`Gcm`] is validated on construction. Classification follows the
//! Kac trichotomy per indecomposable component: a component is finite when
//! its symmetrization is positive definite, affine when its kernel is one
//! dimensional and spanned by a strictly positive vector, and indefinite
//! otherwise. All arithmetic is exact.

mod catalog;
mod iso;

pub use catalog::{
    affinize, declared_class, named_diagram, overextend, rank2_hyperbolic, type_name, CatalogEntry, FIG2_COUNT, NamedClass, CATALOG_MAX_RANK,
};
pub use iso::{automorphisms, diagram_isomorphic};

use std::collections::VecDeque;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg;

/// An integer generalized Cartan matrix.
///
/// Equality and hashing look at the matrix entries only; labels are
/// cosmetic.
#[derive(Clone, Serialize)]
pub struct Gcm {
    rank: usize,
    matrix: Vec<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

impl PartialEq for Gcm {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix
    }
}
impl Eq for Gcm {}

impl std::hash::Hash for Gcm {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.matrix.hash(state);
    }
}

impl fmt::Debug for Gcm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gcm{:?}", self.matrix)
    }
}

/// JSON form: `{"rank": n, "matrix": [[...]], "labels": [...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GcmJson {
    pub rank: Option<usize>,
    pub matrix: Vec<Vec<i64>>,
    #[serde(default)]
    pub labels: Option<Vec<String>>,
}

impl<'de> Deserialize<'de> for Gcm {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = GcmJson::deserialize(d)?;
        Gcm::try_from(raw).map_err(serde::de::Error::custom)
    }
}

impl TryFrom<GcmJson> for Gcm {
    type Error = Error;
    fn try_from(raw: GcmJson) -> Result<Self> {
        if let Some(r) = raw.rank {
            if r != raw.matrix.len() {
                return Err(Error::LengthMismatch { expected: r, got: raw.matrix.len() });
            }
        }
        let g = validate_gcm(raw.matrix)?;
        match raw.labels {
            Some(l) => g.with_labels(l),
            None => Ok(g),
        }
    }
}

/// Checks the three GCM axioms and reports the first violation.
pub fn validate_gcm(matrix: Vec<Vec<i64>>) -> Result<Gcm> {
    let n = matrix.len();
    if n == 0 {
        return Err(Error::Empty);
    }
    if matrix.iter().any(|r| r.len() != n) {
        return Err(Error::NonSquare);
    }
    for i in 0..n {
        if matrix[i][i] != 2 {
            return Err(Error::DiagonalNotTwo(i));
        }
    }
    for i in 0..n {
        for j in 0..n {
            if i != j && matrix[i][j] > 0 {
                return Err(Error::PositiveOffDiagonal(i, j));
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            if i != j && (matrix[i][j] == 0) != (matrix[j][i] == 0) {
                let (a, b) = if matrix[i][j] == 0 { (i, j) } else { (j, i) };
                return Err(Error::AsymmetricZero(a, b));
            }
        }
    }
    Ok(Gcm { rank: n, matrix, labels: None })
}

/// Positive integer symmetrizer `d` with `d_i a_ij = d_j a_ji`, scaled so
/// that the entries of every component are coprime.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Symmetrizer(pub Vec<i64>);

/// Gram matrix of the invariant form on the root lattice:
/// `(alpha_i, alpha_j) = d_i a_ij`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BilinearForm {
    pub gram: Vec<Vec<i64>>,
}

impl BilinearForm {
    pub fn eval(&self, x: &[i64], y: &[i64]) -> i128 {
        let mut acc = 0i128;
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            let mut row = 0i128;
            for (j, &yj) in y.iter().enumerate() {
                row += self.gram[i][j] as i128 * yj as i128;
            }
            acc += xi as i128 * row;
        }
        acc
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum GcmClass {
    Finite,
    /// `delta` is the coprime positive kernel vector, in component order.
    Affine { delta: Vec<i64> },
    Indefinite { hyperbolic: bool },
}

impl GcmClass {
    pub fn is_finite(&self) -> bool {
        matches!(self, GcmClass::Finite)
    }
    pub fn is_affine(&self) -> bool {
        matches!(self, GcmClass::Affine { .. })
    }
}

impl fmt::Display for GcmClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GcmClass::Finite => write!(f, "finite"),
            GcmClass::Affine { .. } => write!(f, "affine"),
            GcmClass::Indefinite { hyperbolic: true } => write!(f, "indefinite, hyperbolic"),
            GcmClass::Indefinite { hyperbolic: false } => write!(f, "indefinite"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Component {
    pub vertices: Vec<usize>,
    pub class: GcmClass,
}

/// Per-component classification of a GCM.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub components: Vec<Component>,
}

impl Classification {
    pub fn is_indecomposable(&self) -> bool {
        self.components.len() == 1
    }

    /// The class of an indecomposable matrix.
    pub fn single(&self) -> Option<&GcmClass> {
        match self.components.as_slice() {
            [c] => Some(&c.class),
            _ => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.components.iter().all(|c| c.class.is_finite())
    }

    pub fn is_affine(&self) -> bool {
        self.single().is_some_and(GcmClass::is_affine)
    }

    pub fn is_hyperbolic(&self) -> bool {
        matches!(self.single(), Some(GcmClass::Indefinite { hyperbolic: true }))
    }
}

impl Gcm {
    pub fn new(matrix: Vec<Vec<i64>>) -> Result<Self> {
        validate_gcm(matrix)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.rank {
            return Err(Error::LengthMismatch { expected: self.rank, got: labels.len() });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    #[inline]
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.matrix[i][j]
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.rank).all(|i| (0..i).all(|j| self.matrix[i][j] == self.matrix[j][i]))
    }

    pub fn transpose(&self) -> Gcm {
        let m = (0..self.rank)
            .map(|i| (0..self.rank).map(|j| self.matrix[j][i]).collect())
            .collect();
        Gcm { rank: self.rank, matrix: m, labels: self.labels.clone() }
    }

    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.rank).filter(move |&j| j != i && self.matrix[i][j] != 0)
    }

    fn check_vertices(&self, s: &[usize]) -> Result<()> {
        match s.iter().find(|&&v| v >= self.rank) {
            Some(&v) => Err(Error::IndexOutOfRange(v, self.rank)),
            None => Ok(()),
        }
    }

    /// Principal submatrix on `s`, in the order given.
    pub fn subdiagram(&self, s: &[usize]) -> Result<Gcm> {
        self.check_vertices(s)?;
        if s.is_empty() {
            return Err(Error::Empty);
        }
        let m = s.iter().map(|&i| s.iter().map(|&j| self.matrix[i][j]).collect()).collect();
        let labels = self
            .labels
            .as_ref()
            .map(|l| s.iter().map(|&i| l[i].clone()).collect());
        Ok(Gcm { rank: s.len(), matrix: m, labels })
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        self.components_within(&(0..self.rank).collect::<Vec<_>>())
    }

    /// Connected components of the subdiagram on `s`, in ambient labels.
    pub fn components_within(&self, s: &[usize]) -> Vec<Vec<usize>> {
        let mut inside = vec![false; self.rank];
        for &v in s {
            inside[v] = true;
        }
        let mut seen = vec![false; self.rank];
        let mut out = Vec::new();
        let mut sorted = s.to_vec();
        sorted.sort_unstable();
        for &start in &sorted {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for w in self.neighbors(v) {
                    if inside[w] && !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected_set(&self, s: &[usize]) -> bool {
        !s.is_empty() && self.components_within(s).len() == 1
    }

    /// Vertices outside `y` with no edge into `y`.
    pub fn perp(&self, y: &[usize]) -> Result<Vec<usize>> {
        self.check_vertices(y)?;
        Ok((0..self.rank)
            .filter(|v| !y.contains(v) && y.iter().all(|&u| self.matrix[*v][u] == 0))
            .collect())
    }

    pub fn symmetrize(&self) -> Result<Symmetrizer> {
        let n = self.rank;
        let mut d: Vec<Option<BigRational>> = vec![None; n];
        for comp in self.components() {
            let root = comp[0];
            d[root] = Some(BigRational::one());
            let mut queue = VecDeque::from([root]);
            while let Some(i) = queue.pop_front() {
                let di = d[i].clone().expect("visited");
                for j in self.neighbors(i) {
                    // d_i a_ij = d_j a_ji
                    let want = &di * BigRational::new(self.matrix[i][j].into(), self.matrix[j][i].into());
                    match &d[j] {
                        Some(dj) if *dj != want => return Err(Error::NotSymmetrizable),
                        Some(_) => {}
                        None => {
                            d[j] = Some(want);
                            queue.push_back(j);
                        }
                    }
                }
            }
            let mut l = BigInt::one();
            for &v in &comp {
                l = l.lcm(d[v].as_ref().unwrap().denom());
            }
            let ints: Vec<BigInt> = comp.iter().map(|&v| (d[v].as_ref().unwrap() * &l).to_integer()).collect();
            let g = ints.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
            for (k, &v) in comp.iter().enumerate() {
                d[v] = Some(BigRational::from_integer(&ints[k] / &g));
            }
        }
        d.into_iter()
            .map(|x| x.unwrap().to_integer().to_i64().ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()
            .map(Symmetrizer)
    }

    pub fn bilinear_form(&self) -> Result<BilinearForm> {
        let Symmetrizer(d) = self.symmetrize()?;
        let gram = (0..self.rank)
            .map(|i| (0..self.rank).map(|j| d[i] * self.matrix[i][j]).collect())
            .collect();
        Ok(BilinearForm { gram })
    }

    pub fn classify(&self) -> Result<Classification> {
        let d = self.symmetrize()?;
        let components = self
            .components()
            .into_iter()
            .map(|vs| {
                let class = self.component_class(&vs, &d.0, true);
                Component { vertices: vs, class }
            })
            .collect();
        Ok(Classification { components })
    }

    /// Class of the connected vertex set `vs`; `d` symmetrizes `self`.
    pub(crate) fn component_class(&self, vs: &[usize], d: &[i64], want_hyperbolic: bool) -> GcmClass {
        let sym: Vec<Vec<i64>> = vs
            .iter()
            .map(|&i| vs.iter().map(|&j| d[i] * self.matrix[i][j]).collect())
            .collect();
        if leading_minors_positive(&sym) {
            return GcmClass::Finite;
        }
        let sub: Vec<Vec<i64>> = vs.iter().map(|&i| vs.iter().map(|&j| self.matrix[i][j]).collect()).collect();
        let ker = linalg::kernel(&sub);
        if ker.len() == 1 {
            if let Some(mut v) = linalg::primitive_integer(&ker[0]) {
                if v.iter().all(|&x| x < 0) {
                    v.iter_mut().for_each(|x| *x = -*x);
                }
                if v.iter().all(|&x| x > 0) {
                    return GcmClass::Affine { delta: v };
                }
            }
        }
        let hyperbolic = want_hyperbolic
            && vs.iter().all(|&drop| {
                let rest: Vec<usize> = vs.iter().copied().filter(|&v| v != drop).collect();
                self.components_within(&rest)
                    .iter()
                    .all(|c| !matches!(self.component_class(c, d, false), GcmClass::Indefinite { .. }))
            });
        GcmClass::Indefinite { hyperbolic }
    }

    /// True iff the vertex set `vs` spans a connected affine subdiagram.
    pub fn is_affine_subset(&self, vs: &[usize]) -> Result<bool> {
        if !self.is_connected_set(vs) {
            return Ok(false);
        }
        let d = self.symmetrize()?;
        Ok(self.component_class(vs, &d.0, false).is_affine())
    }

    /// Null root of an indecomposable affine GCM.
    pub fn null_root(&self) -> Result<Vec<i64>> {
        match self.classify()?.single() {
            Some(GcmClass::Affine { delta }) => Ok(delta.clone()),
            _ => Err(Error::WrongClass { expected: "affine" }),
        }
    }

    /// Highest root of an indecomposable finite GCM.
    pub fn highest_root(&self) -> Result<Vec<i64>> {
        let c = self.classify()?;
        if !c.is_indecomposable() || !c.is_finite() {
            return Err(Error::WrongClass { expected: "indecomposable finite" });
        }
        let rs = crate::roots::RootSystem::new(self.clone())?;
        let roots = rs.finite_positive_roots()?;
        let top = roots.last().cloned().ok_or_else(|| Error::Internal("no roots".into()))?;
        debug_assert!((0..self.rank).all(|i| rs.simple_coroot_pairing(i, &top) >= 0));
        Ok(top)
    }
}

/// All leading principal minors positive, from a single Bareiss pass.
fn leading_minors_positive(m: &[Vec<i64>]) -> bool {
    let n = m.len();
    let mut a: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let mut prev = BigInt::one();
    for k in 0..n {
        // a[k][k] is now the (k+1)-th leading minor
        if !a[k][k].is_positive() {
            return false;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a1pp() -> Vec<Vec<i64>> {
        vec![vec![2, -2, 0], vec![-2, 2, -1], vec![0, -1, 2]]
    }

    #[test]
    fn validation_errors() {
        assert_eq!(Gcm::new(vec![vec![2]]).unwrap().rank(), 1);
        assert!(Gcm::new(a1pp()).is_ok());
        assert_eq!(Gcm::new(vec![vec![2, 1], vec![1, 2]]), Err(Error::PositiveOffDiagonal(0, 1)));
        assert_eq!(Gcm::new(vec![vec![2, 0], vec![-1, 2]]), Err(Error::AsymmetricZero(0, 1)));
        assert_eq!(Gcm::new(vec![vec![1, 0], vec![0, 2]]), Err(Error::DiagonalNotTwo(0)));
        assert_eq!(Gcm::new(vec![vec![2, 0], vec![0]]), Err(Error::NonSquare));
    }

    #[test]
    fn symmetrizers() {
        let a2 = Gcm::new(vec![vec![2, -1], vec![-1, 2]]).unwrap();
        assert_eq!(a2.symmetrize().unwrap().0, vec![1, 1]);
        let c2 = Gcm::new(vec![vec![2, -2], vec![-1, 2]]).unwrap();
        assert_eq!(c2.symmetrize().unwrap().0, vec![1, 2]);
        assert_eq!(Gcm::new(a1pp()).unwrap().symmetrize().unwrap().0, vec![1, 1, 1]);
        // a 3-cycle whose bond ratios do not multiply to one
        let bad = Gcm::new(vec![vec![2, -1, -1], vec![-2, 2, -1], vec![-1, -1, 2]]).unwrap();
        assert_eq!(bad.symmetrize(), Err(Error::NotSymmetrizable));
    }

    #[test]
    fn classification_basics() {
        let aff = Gcm::new(vec![vec![2, -2], vec![-2, 2]]).unwrap();
        assert_eq!(aff.classify().unwrap().single(), Some(&GcmClass::Affine { delta: vec![1, 1] }));
        let hyp = Gcm::new(a1pp()).unwrap();
        assert_eq!(
            hyp.classify().unwrap().single(),
            Some(&GcmClass::Indefinite { hyperbolic: true })
        );
        let sum = Gcm::new(vec![vec![2, 0], vec![0, 2]]).unwrap();
        assert_eq!(sum.components(), vec![vec![0], vec![1]]);
        assert!(sum.classify().unwrap().is_finite());
        let r2 = Gcm::new(vec![vec![2, -3], vec![-3, 2]]).unwrap();
        assert!(r2.classify().unwrap().is_hyperbolic());
    }

    #[test]
    fn perp_and_subdiagram() {
        let g = Gcm::new(a1pp()).unwrap();
        assert_eq!(g.perp(&[2]).unwrap(), vec![0]);
        assert_eq!(g.perp(&[0, 1]).unwrap(), Vec::<usize>::new());
        assert_eq!(g.subdiagram(&[0, 1]).unwrap().matrix(), &[vec![2, -2], vec![-2, 2]]);
        assert_eq!(g.subdiagram(&[3]), Err(Error::IndexOutOfRange(3, 3)));
    }

    #[test]
    fn highest_and_null_roots() {
        let a2 = Gcm::new(vec![vec![2, -1], vec![-1, 2]]).unwrap();
        assert_eq!(a2.highest_root().unwrap(), vec![1, 1]);
        let aff = Gcm::new(vec![vec![2, -2], vec![-2, 2]]).unwrap();
        assert_eq!(aff.null_root().unwrap(), vec![1, 1]);
        assert!(matches!(aff.highest_root(), Err(Error::WrongClass { .. })));
        assert!(matches!(a2.null_root(), Err(Error::WrongClass { .. })));
    }
}
