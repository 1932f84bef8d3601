//! Root system of a symmetrizable GCM, worked with on coefficient vectors
//! over the simple roots.
//!
//! Membership is decided by descent. Given a sign-homogeneous `gamma`,
//! take `|gamma|` and repeatedly apply the smallest-index simple reflection
//! `s_i` with `<alpha_i^vee, gamma> > 0`. Such a step lowers the height by
//! that positive amount, and heights of nonzero positive vectors are at
//! least 1, so the loop stops after fewer than `height(gamma)` steps. It
//! ends in one of three ways:
//!
//! * at a simple root: `gamma` is real;
//! * at a vector with a negative coefficient: `gamma` is not a root, since
//!   `s_i` permutes the positive roots other than `alpha_i`;
//! * at a vector with no descent: it is imaginary exactly when its support
//!   is connected (it then lies in the fundamental set `K`, whose
//!   `W`-translates are the positive imaginary roots); otherwise not a root.
//!
//! Coefficients are `i64`. Operations that can grow coefficients (Weyl
//! words) use checked arithmetic and report [`Error::Overflow`].

use std::collections::{BTreeSet, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gcm::{BilinearForm, Gcm};

/// A sequence of simple reflection indices `[i1, ..., ik]` standing for the
/// product `s_i1 s_i2 ... s_ik`; acting on a vector applies `s_ik` first.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeylWord(pub Vec<usize>);

impl WeylWord {
    pub fn identity() -> Self {
        WeylWord(Vec::new())
    }

    /// Word for "first apply `applied[0]`, then `applied[1]`, ...".
    pub fn from_applied(mut applied: Vec<usize>) -> Self {
        applied.reverse();
        WeylWord(applied)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Self {
        let mut v = self.0.clone();
        v.reverse();
        WeylWord(v)
    }

    /// The product `self * other` (apply `other` first).
    pub fn compose(&self, other: &WeylWord) -> Self {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        WeylWord(v)
    }

    /// Reflections in application order.
    pub fn applied(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().rev().copied()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RootClass {
    RealRoot,
    ImaginaryRoot,
    NotRoot,
    Zero,
}

impl RootClass {
    pub fn is_root(self) -> bool {
        matches!(self, RootClass::RealRoot | RootClass::ImaginaryRoot)
    }
}

/// A root with its cached norm `(beta, beta)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Root {
    pub coeffs: Vec<i64>,
    pub norm: i64,
}

/// How a descent ended.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum DescentEnd {
    /// Reached the simple root `alpha_i`.
    Simple(usize),
    /// No allowed index lowers the height any further.
    Stuck,
    /// A reflection produced a negative coefficient.
    Mixed,
}

/// Root system engine for one ambient GCM.
#[derive(Debug, Clone)]
pub struct RootSystem {
    gcm: Gcm,
    d: Vec<i64>,
    form: BilinearForm,
    simply_laced: bool,
}

pub fn height(v: &[i64]) -> i64 {
    v.iter().sum()
}

pub(crate) fn unit(n: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

pub(crate) fn negate(v: &[i64]) -> Vec<i64> {
    v.iter().map(|x| -x).collect()
}

/// `Some(true)` for nonnegative, `Some(false)` for nonpositive, `None` for
/// mixed signs; zero counts as nonnegative.
pub(crate) fn sign_of(v: &[i64]) -> Option<bool> {
    let pos = v.iter().any(|&x| x > 0);
    let neg = v.iter().any(|&x| x < 0);
    match (pos, neg) {
        (true, true) => None,
        (false, true) => Some(false),
        _ => Some(true),
    }
}

/// Canonical enumeration order: height, then coefficients.
pub fn root_order(a: &[i64], b: &[i64]) -> std::cmp::Ordering {
    height(a).cmp(&height(b)).then_with(|| a.cmp(b))
}

impl RootSystem {
    pub fn new(gcm: Gcm) -> Result<Self> {
        let d = gcm.symmetrize()?.0;
        let form = gcm.bilinear_form()?;
        let simply_laced = gcm.is_symmetric();
        Ok(RootSystem { gcm, d, form, simply_laced })
    }

    pub fn gcm(&self) -> &Gcm {
        &self.gcm
    }

    pub fn rank(&self) -> usize {
        self.gcm.rank()
    }

    pub fn symmetrizer(&self) -> &[i64] {
        &self.d
    }

    pub fn is_simply_laced(&self) -> bool {
        self.simply_laced
    }

    pub fn check_len(&self, v: &[i64]) -> Result<()> {
        if v.len() == self.rank() {
            Ok(())
        } else {
            Err(Error::LengthMismatch { expected: self.rank(), got: v.len() })
        }
    }

    /// `(x, y)` for the invariant form.
    pub fn form(&self, x: &[i64], y: &[i64]) -> i128 {
        self.form.eval(x, y)
    }

    pub fn norm(&self, x: &[i64]) -> i128 {
        self.form.eval(x, x)
    }

    pub fn root(&self, coeffs: Vec<i64>) -> Result<Root> {
        let norm = i64::try_from(self.norm(&coeffs)).map_err(|_| Error::Overflow)?;
        Ok(Root { coeffs, norm })
    }

    /// `<alpha_i^vee, gamma> = sum_j a_ij gamma_j`.
    #[inline]
    pub fn simple_coroot_pairing(&self, i: usize, gamma: &[i64]) -> i128 {
        let row = &self.gcm.matrix()[i];
        row.iter().zip(gamma).map(|(&a, &g)| a as i128 * g as i128).sum()
    }

    /// `2 (beta, gamma) / (beta, beta)`.
    pub fn pairing(&self, beta: &[i64], gamma: &[i64]) -> Result<i64> {
        self.check_len(beta)?;
        self.check_len(gamma)?;
        let nb = self.norm(beta);
        if nb == 0 {
            return Err(Error::IsotropicCoroot);
        }
        let num = 2 * self.form(beta, gamma);
        if num % nb != 0 {
            return Err(Error::NonIntegralPairing);
        }
        i64::try_from(num / nb).map_err(|_| Error::Overflow)
    }

    /// `s_i(gamma)`, checked.
    pub fn reflect_simple(&self, i: usize, gamma: &[i64]) -> Result<Vec<i64>> {
        let k = i64::try_from(self.simple_coroot_pairing(i, gamma)).map_err(|_| Error::Overflow)?;
        let mut out = gamma.to_vec();
        out[i] = out[i].checked_sub(k).ok_or(Error::Overflow)?;
        Ok(out)
    }

    pub fn apply_word(&self, w: &WeylWord, gamma: &[i64]) -> Result<Vec<i64>> {
        self.check_len(gamma)?;
        let mut v = gamma.to_vec();
        for i in w.applied() {
            if i >= self.rank() {
                return Err(Error::IndexOutOfRange(i, self.rank()));
            }
            v = self.reflect_simple(i, &v)?;
        }
        Ok(v)
    }

    /// Reflection in an arbitrary real root: `gamma - <beta^vee, gamma> beta`.
    pub fn reflect(&self, beta: &[i64], gamma: &[i64]) -> Result<Vec<i64>> {
        let k = self.pairing(beta, gamma)?;
        gamma
            .iter()
            .zip(beta)
            .map(|(&g, &b)| b.checked_mul(k).and_then(|x| g.checked_sub(x)).ok_or(Error::Overflow))
            .collect()
    }

    /// Descent on a nonnegative vector using only indices accepted by
    /// `allowed`; reflections are appended to `applied`.
    pub(crate) fn descend(
        &self,
        gamma: &mut [i64],
        allowed: impl Fn(usize) -> bool,
        stop_at_simple: bool,
        applied: &mut Vec<usize>,
    ) -> DescentEnd {
        let n = self.rank();
        loop {
            if stop_at_simple {
                if let Some(i) = simple_index(gamma) {
                    return DescentEnd::Simple(i);
                }
            }
            let step = (0..n).filter(|&i| allowed(i)).find_map(|i| {
                let k = self.simple_coroot_pairing(i, gamma);
                (k > 0).then_some((i, k))
            });
            let Some((i, k)) = step else {
                return DescentEnd::Stuck;
            };
            applied.push(i);
            // k <= 2 * gamma_i is not guaranteed, so compare before writing
            if k > gamma[i] as i128 {
                gamma[i] = -1;
                return DescentEnd::Mixed;
            }
            gamma[i] -= k as i64;
        }
    }

    pub fn classify_element(&self, gamma: &[i64]) -> RootClass {
        if gamma.len() != self.rank() {
            return RootClass::NotRoot;
        }
        let mut v = match sign_of(gamma) {
            None => return RootClass::NotRoot,
            Some(true) => gamma.to_vec(),
            Some(false) => negate(gamma),
        };
        if v.iter().all(|&x| x == 0) {
            return RootClass::Zero;
        }
        let mut scratch = Vec::new();
        match self.descend(&mut v, |_| true, true, &mut scratch) {
            DescentEnd::Simple(_) => RootClass::RealRoot,
            DescentEnd::Mixed => RootClass::NotRoot,
            DescentEnd::Stuck => {
                let support: Vec<usize> = (0..v.len()).filter(|&i| v[i] != 0).collect();
                if self.gcm.is_connected_set(&support) {
                    RootClass::ImaginaryRoot
                } else {
                    RootClass::NotRoot
                }
            }
        }
    }

    pub fn is_root(&self, gamma: &[i64]) -> bool {
        self.classify_element(gamma).is_root()
    }

    pub fn is_real_root(&self, gamma: &[i64]) -> bool {
        self.classify_element(gamma) == RootClass::RealRoot
    }

    /// For a real root `beta`, a word `u` and index `j` with
    /// `|beta| = u(alpha_j)`.
    pub fn real_root_witness(&self, beta: &[i64]) -> Result<(WeylWord, usize)> {
        let mut v = match sign_of(beta) {
            Some(true) => beta.to_vec(),
            Some(false) => negate(beta),
            None => return Err(Error::NotRealRootVector(beta.to_vec())),
        };
        let mut applied = Vec::new();
        match self.descend(&mut v, |_| true, true, &mut applied) {
            // alpha_j = s_ir ... s_i1 |beta|, so |beta| = s_i1 ... s_ir alpha_j
            DescentEnd::Simple(j) => Ok((WeylWord(applied), j)),
            _ => Err(Error::NotRealRootVector(beta.to_vec())),
        }
    }

    /// The reflection `s_beta` spelled in simple reflections.
    pub fn reflection_word(&self, beta: &[i64]) -> Result<WeylWord> {
        let (u, j) = self.real_root_witness(beta)?;
        Ok(u.compose(&WeylWord(vec![j])).compose(&u.inverse()))
    }

    /// All positive roots of height at most `max_height`, split into real
    /// and imaginary, each sorted by [`root_order`].
    pub fn positive_roots_up_to(&self, max_height: i64, cap: usize) -> Result<(Vec<Vec<i64>>, Vec<Vec<i64>>)> {
        let n = self.rank();
        let mut real = Vec::new();
        let mut imag = Vec::new();
        let mut level: Vec<Vec<i64>> = (0..n).map(|i| unit(n, i)).collect();
        let mut h = 1;
        while !level.is_empty() && h <= max_height {
            let mut next: BTreeSet<Vec<i64>> = BTreeSet::new();
            for r in &level {
                match self.classify_element(r) {
                    RootClass::RealRoot => real.push(r.clone()),
                    RootClass::ImaginaryRoot => imag.push(r.clone()),
                    _ => unreachable!("level sets only hold roots"),
                }
                if real.len() + imag.len() > cap {
                    return Err(Error::BudgetExceeded(cap));
                }
                if h == max_height {
                    continue;
                }
                for i in 0..n {
                    let mut c = r.clone();
                    c[i] += 1;
                    if !next.contains(&c) && self.is_root(&c) {
                        next.insert(c);
                    }
                }
            }
            level = next.into_iter().collect();
            h += 1;
        }
        real.sort_by(|a, b| root_order(a, b));
        imag.sort_by(|a, b| root_order(a, b));
        Ok((real, imag))
    }

    /// Positive real roots with height in `1..=max_height`.
    pub fn enumerate_real_roots(&self, max_height: i64, cap: usize) -> Result<Vec<Vec<i64>>> {
        if max_height < 1 {
            return Err(Error::PreconditionMismatch("height bound must be at least 1".into()));
        }
        Ok(self.positive_roots_up_to(max_height, cap)?.0)
    }

    /// All positive roots of a finite-type GCM.
    pub fn finite_positive_roots(&self) -> Result<Vec<Vec<i64>>> {
        let (real, imag) = self.positive_roots_up_to(i64::MAX, 1 << 20)?;
        if !imag.is_empty() {
            return Err(Error::WrongClass { expected: "finite" });
        }
        Ok(real)
    }

    /// The `beta`-string through `gamma`: largest `p, q` with
    /// `gamma - p beta, ..., gamma + q beta` all roots (zero allowed).
    pub fn root_string(&self, beta: &[i64], gamma: &[i64]) -> Result<(i64, i64)> {
        self.check_len(beta)?;
        self.check_len(gamma)?;
        if !self.is_real_root(beta) {
            return Err(Error::NotRealRootVector(beta.to_vec()));
        }
        if !self.is_root(gamma) {
            return Err(Error::NotARoot(gamma.to_vec()));
        }
        let in_string = |v: &[i64]| !matches!(self.classify_element(v), RootClass::NotRoot);
        let walk = |dir: i64| -> Result<i64> {
            let mut k = 0;
            loop {
                let v: Vec<i64> = gamma
                    .iter()
                    .zip(beta)
                    .map(|(&g, &b)| b.checked_mul(dir * (k + 1)).and_then(|x| g.checked_add(x)).ok_or(Error::Overflow))
                    .collect::<Result<_>>()?;
                if !in_string(&v) {
                    return Ok(k);
                }
                k += 1;
            }
        };
        Ok((walk(-1)?, walk(1)?))
    }

    /// Every real root in `roots` whose `W`-images stay in the window;
    /// convenience for tests and diagnostics.
    pub fn sorted_unique(mut v: Vec<Vec<i64>>) -> Vec<Vec<i64>> {
        let mut seen = HashSet::new();
        v.retain(|x| seen.insert(x.clone()));
        v.sort_by(|a, b| root_order(a, b));
        v
    }
}

/// `Some(i)` if `v` is the simple root `alpha_i`.
pub(crate) fn simple_index(v: &[i64]) -> Option<usize> {
    let mut found = None;
    for (i, &x) in v.iter().enumerate() {
        match x {
            0 => {}
            1 if found.is_none() => found = Some(i),
            _ => return None,
        }
    }
    found
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gcm::named_diagram;

    fn rs(name: &str) -> RootSystem {
        RootSystem::new(named_diagram(name).unwrap()).unwrap()
    }

    #[test]
    fn pairing_examples() {
        let a11 = rs("A1~");
        assert_eq!(a11.pairing(&[1, 0], &[0, 1]).unwrap(), -2);
        assert_eq!(a11.pairing(&[2, 1], &[2, 1]).unwrap(), 2);
        assert_eq!(a11.pairing(&[1, 1], &[1, 0]), Err(Error::IsotropicCoroot));
        let e10 = rs("E10");
        let theta = named_diagram("E8").unwrap().highest_root().unwrap();
        let mut t = theta.clone();
        t.extend([0, 0]);
        let mut ap = vec![0; 10];
        ap[9] = 1;
        assert_eq!(e10.pairing(&t, &ap).unwrap(), 0);
    }

    #[test]
    fn classify_examples() {
        assert_eq!(rs("A3").classify_element(&[0, 1, 0]), RootClass::RealRoot);
        assert_eq!(rs("A1~").classify_element(&[1, 1]), RootClass::ImaginaryRoot);
        assert_eq!(rs("A1++").classify_element(&[1, 0, 1]), RootClass::NotRoot);
        assert_eq!(rs("A2").classify_element(&[0, 0]), RootClass::Zero);
        assert_eq!(rs("A2").classify_element(&[1, -1]), RootClass::NotRoot);
        assert_eq!(rs("A2").classify_element(&[-1, -1]), RootClass::RealRoot);
        assert_eq!(rs("A2").classify_element(&[2, 0]), RootClass::NotRoot);
        assert_eq!(rs("A1~").classify_element(&[2, 2]), RootClass::ImaginaryRoot);
    }

    #[test]
    fn real_roots_small() {
        assert_eq!(rs("A2").enumerate_real_roots(2, 100).unwrap(), vec![vec![0, 1], vec![1, 0], vec![1, 1]]);
        let e8 = rs("E8").enumerate_real_roots(29, 1000).unwrap();
        assert_eq!(e8.len(), 120);
        assert_eq!(e8.last().unwrap(), &vec![2, 3, 4, 6, 5, 4, 3, 2]);
        assert_eq!(height(e8.last().unwrap()), 29);
    }

    #[test]
    fn affine_a1_real_roots() {
        // positive real roots of A1~ are alpha_0 + k delta, alpha_1 + k delta,
        // -alpha_0 + (k+1) delta, -alpha_1 + (k+1) delta
        let a = rs("A1~");
        assert_eq!(a.enumerate_real_roots(4, 100).unwrap(), vec![vec![0, 1], vec![1, 0], vec![1, 2], vec![2, 1]]);
        assert_eq!(a.enumerate_real_roots(5, 100).unwrap().len(), 6);
        assert!(matches!(a.enumerate_real_roots(50, 10), Err(Error::BudgetExceeded(10))));
    }

    #[test]
    fn strings() {
        assert_eq!(rs("A2").root_string(&[1, 0], &[0, 1]).unwrap(), (0, 1));
        assert_eq!(rs("A1~").root_string(&[1, 0], &[0, 1]).unwrap(), (0, 2));
        assert_eq!(rs("A2").root_string(&[1, 1], &[1, 1]).unwrap(), (2, 0));
        assert!(matches!(rs("A2").root_string(&[1, 0], &[2, 0]), Err(Error::NotARoot(_))));
    }

    #[test]
    fn words() {
        let a2 = rs("A2");
        assert_eq!(a2.apply_word(&WeylWord::identity(), &[3, 4]).unwrap(), vec![3, 4]);
        assert_eq!(a2.apply_word(&WeylWord(vec![0]), &[1, 0]).unwrap(), vec![-1, 0]);
        // s_0 s_1 alpha_0 = s_0 (alpha_0 + alpha_1) = alpha_1
        assert_eq!(a2.apply_word(&WeylWord(vec![0, 1]), &[1, 0]).unwrap(), vec![0, 1]);
        let aff = rs("D4~");
        let delta = aff.gcm().null_root().unwrap();
        let w = WeylWord(vec![0, 4, 2, 1, 3, 2, 4]);
        assert_eq!(aff.apply_word(&w, &delta).unwrap(), delta);
    }

    #[test]
    fn reflection_word_matches_reflection() {
        let e = rs("A1++");
        let beta = e.apply_word(&WeylWord(vec![2, 1, 0]), &[0, 0, 1]).unwrap();
        let w = e.reflection_word(&beta).unwrap();
        for g in [[1, 0, 0], [0, 1, 0], [0, 0, 1], [3, 2, 1]] {
            assert_eq!(e.apply_word(&w, &g).unwrap(), e.reflect(&beta, &g).unwrap());
        }
    }

    #[test]
    fn overflow_is_reported() {
        let e = rs("hyp:rank2:3");
        let w = WeylWord([0usize, 1].repeat(60));
        assert_eq!(e.apply_word(&w, &[1, 0]), Err(Error::Overflow));
    }
}
