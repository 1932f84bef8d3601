//! Multiplicities `mult(K, X)`: the number of `W(X)`-orbits of π-systems
//! of type `K` in `X`.
//!
//! For `K` of Ext type and `X` simply-laced,
//! `mult(K, X) = 2 Σ_Z mult(K̊, Z̊)` over the Ext subdiagrams `Z ⊆ X`, which
//! reduces everything to finite type. Finite multiplicities are computed
//! live, either by brute force (enumerate every π-system, close under
//! simple reflections) or, for larger root systems, by counting canonical
//! representatives of a stabilizer chain.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::path::Path;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::gcm::{automorphisms, diagram_isomorphic, named_diagram, type_name, Gcm};
use crate::overext::{decompose_within, ext_decompose, ext_subdiagrams, ExtDecomposition};
use crate::pisystem::{check_pi_system, reduce_to_simple, PiSystem, Sign};
use crate::roots::{negate, root_order, RootSystem, WeylWord};

/// Default cap on partial nodes in [`enumerate_pi_systems`].
pub const DEFAULT_NODE_BUDGET: usize = 1_000_000;
/// Root-count ceiling for the brute-force finite oracle.
pub const BRUTE_MAX_ROOTS: usize = 60;
/// Largest finite rank computed live; above it only the table answers.
pub const FINITE_LIVE_CAP: usize = 16;
pub const ORACLE_VERSION: &str = "chain-1";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MultValue {
    Finite(u64),
    Infinite,
    /// No counting theorem applies and no witness was found.
    Unknown,
}

impl Serialize for MultValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            MultValue::Finite(n) => s.serialize_u64(*n),
            MultValue::Infinite => s.serialize_str("infinite"),
            MultValue::Unknown => s.serialize_str("unknown"),
        }
    }
}

impl std::fmt::Display for MultValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            MultValue::Finite(n) => write!(f, "{n}"),
            MultValue::Infinite => write!(f, "infinite"),
            MultValue::Unknown => write!(f, "unknown"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubdiagramCount {
    pub subdiagram: ExtDecomposition,
    pub finite_mult: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    Ext {
        subdiagrams: Vec<SubdiagramCount>,
        /// Number of Ext subdiagrams of each type.
        summary: BTreeMap<String, usize>,
    },
    AffineFamily {
        witness: Vec<Vec<i64>>,
        /// Moves the witness into `Y`.
        word: WeylWord,
        y: Vec<usize>,
        /// `k`-invariants of the shifted systems for `p = 0, 1, 2, 3`.
        k_invariants: Vec<i64>,
    },
    Finite {
        oracle: String,
    },
    None,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MultReport {
    pub k: Gcm,
    pub x: Gcm,
    pub value: MultValue,
    pub certificate: Certificate,
}

/// Frozen finite multiplicities, one JSON object per line.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableEntry {
    pub k: String,
    pub z: String,
    pub value: u64,
    pub oracle: String,
}

#[derive(Debug, Clone, Default)]
pub struct FiniteTable {
    entries: HashMap<(String, String), TableEntry>,
}

impl FiniteTable {
    pub fn parse(text: &str) -> Result<Self> {
        let mut entries = HashMap::new();
        for (n, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let e: TableEntry =
                serde_json::from_str(line).map_err(|err| Error::Table(format!("line {}: {err}", n + 1)))?;
            entries.insert((e.k.clone(), e.z.clone()), e);
        }
        Ok(FiniteTable { entries })
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Table(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn get(&self, k: &str, z: &str) -> Option<&TableEntry> {
        self.entries.get(&(k.to_string(), z.to_string()))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

#[derive(Debug, Clone)]
pub struct CountOptions {
    pub table: Option<Arc<FiniteTable>>,
    pub live_cap: usize,
    pub node_budget: usize,
    /// Height bound for witness searches (affine `K`).
    pub height: i64,
}

impl Default for CountOptions {
    fn default() -> Self {
        CountOptions { table: None, live_cap: FINITE_LIVE_CAP, node_budget: DEFAULT_NODE_BUDGET, height: 8 }
    }
}

fn require_simply_laced(x: &Gcm) -> Result<()> {
    if x.is_symmetric() {
        Ok(())
    } else {
        Err(Error::NotSimplyLaced)
    }
}

fn ext_type(k: &Gcm) -> Result<ExtDecomposition> {
    if !k.is_symmetric() || k.components().len() != 1 {
        return Err(Error::NotExtType);
    }
    ext_decompose(k)?.ok_or(Error::NotExtType)
}

fn summarize(subs: &[SubdiagramCount]) -> BTreeMap<String, usize> {
    let mut m = BTreeMap::new();
    for s in subs {
        let name = s.subdiagram.name.clone().unwrap_or_else(|| "unnamed".into());
        *m.entry(name).or_insert(0) += 1;
    }
    m
}

/// `mult(A1++, X) = 2 · #(Ext subdiagrams of X)`.
pub fn mult_a1pp(x: &Gcm) -> Result<MultReport> {
    require_simply_laced(x)?;
    let subs: Vec<SubdiagramCount> =
        ext_subdiagrams(x)?.into_iter().map(|d| SubdiagramCount { subdiagram: d, finite_mult: 1 }).collect();
    Ok(MultReport {
        k: named_diagram("A1++")?,
        x: x.clone(),
        value: MultValue::Finite(2 * subs.len() as u64),
        certificate: Certificate::Ext { summary: summarize(&subs), subdiagrams: subs },
    })
}

/// `mult(K, X)` for `K` of Ext type and simply-laced `X`.
pub fn mult_ext(k: &Gcm, x: &Gcm, opts: &CountOptions) -> Result<MultReport> {
    let kd = ext_type(k)?;
    require_simply_laced(x)?;
    let k_fin = k.subdiagram(&kd.finite_part)?;
    let mut subs = Vec::new();
    for d in ext_subdiagrams(x)? {
        let z_fin = x.subdiagram(&d.finite_part)?;
        let fm = finite_mult_with(&k_fin, &z_fin, opts)?;
        subs.push(SubdiagramCount { subdiagram: d, finite_mult: fm });
    }
    let total: u64 = subs.iter().map(|s| s.finite_mult).sum();
    Ok(MultReport {
        k: k.clone(),
        x: x.clone(),
        value: MultValue::Finite(2 * total),
        certificate: Certificate::Ext { summary: summarize(&subs), subdiagrams: subs },
    })
}

/// Dispatches on the type of `K`: Ext, affine, or finite.
pub fn mult(k: &Gcm, x: &Gcm, opts: &CountOptions) -> Result<MultReport> {
    let kc = k.classify()?;
    let report = |value, certificate| MultReport { k: k.clone(), x: x.clone(), value, certificate };
    if ext_type(k).is_ok() {
        if type_name(k).is_some_and(|t| t.0 == "A1++") {
            return mult_a1pp(x);
        }
        return mult_ext(k, x, opts);
    }
    if kc.is_affine() {
        return Ok(match affine_witness(k, x, opts)? {
            Some(cert) => report(MultValue::Infinite, cert),
            None => report(MultValue::Unknown, Certificate::None),
        });
    }
    let xc = x.classify()?;
    if kc.is_finite() && xc.is_finite() {
        let v = finite_mult_with(k, x, opts)?;
        return Ok(report(MultValue::Finite(v), Certificate::Finite { oracle: ORACLE_VERSION.into() }));
    }
    Ok(report(MultValue::Unknown, Certificate::None))
}

/// A linearly independent π-system of affine type `k` in `x` within the
/// height window, with the `k`-invariants of its shift family.
fn affine_witness(k: &Gcm, x: &Gcm, opts: &CountOptions) -> Result<Option<Certificate>> {
    let rs = Arc::new(RootSystem::new(x.clone())?);
    let found = enumerate_pi_systems_budget(&rs, k, opts.height, opts.node_budget)?;
    let Some(sigma) = found.into_iter().find(|s| s.is_linearly_independent()) else {
        return Ok(None);
    };
    let (y, w, _) = sigma.locate_affine_support()?;
    let moved = sigma.apply_word(&w)?;
    let k_invariants = (0..4)
        .map(|p| Ok(moved.shift_family(&y, p)?.locate_affine_support()?.2))
        .collect::<Result<Vec<_>>>()?;
    Ok(Some(Certificate::AffineFamily { witness: sigma.roots().to_vec(), word: w, y, k_invariants }))
}

fn require_finite(g: &Gcm) -> Result<()> {
    if g.classify()?.is_finite() {
        Ok(())
    } else {
        Err(Error::WrongClass { expected: "finite" })
    }
}

/// Number of `W(z)`-orbits of π-systems of type `k` in `z`, both finite.
pub fn finite_mult(k: &Gcm, z: &Gcm) -> Result<u64> {
    finite_mult_with(k, z, &CountOptions::default())
}

pub fn finite_mult_with(k: &Gcm, z: &Gcm, opts: &CountOptions) -> Result<u64> {
    require_finite(k)?;
    require_finite(z)?;
    if k.rank() > z.rank() {
        return Ok(0);
    }
    let names = (type_name(k).map(|t| t.0), type_name(z).map(|t| t.0));
    let entry = match (&opts.table, &names) {
        (Some(t), (Some(kn), Some(zn))) => t.get(kn, zn).cloned(),
        _ => None,
    };
    if z.rank() > opts.live_cap {
        return entry
            .map(|e| e.value)
            .ok_or(Error::RankCapExceeded { rank: z.rank(), cap: opts.live_cap });
    }
    let rs = RootSystem::new(z.clone())?;
    let roots = all_roots(&rs)?;
    let live = if roots.len() <= BRUTE_MAX_ROOTS {
        finite_mult_brute_in(&rs, &roots, k)?
    } else {
        finite_mult_chain_in(&rs, &roots, k)?
    };
    if let Some(e) = entry {
        if e.value != live {
            return Err(Error::TableConflict { k: e.k, z: e.z, table: e.value, live });
        }
    }
    Ok(live)
}

fn all_roots(rs: &RootSystem) -> Result<Vec<Vec<i64>>> {
    let pos = rs.finite_positive_roots()?;
    let mut all = pos.clone();
    all.extend(pos.iter().map(|r| negate(r)));
    Ok(all)
}

/// Ordered tuples of roots (as indices into `roots`) whose pairing matrix
/// is exactly `k` and whose differences are not roots.
struct TupleSearch<'a> {
    rs: &'a RootSystem,
    roots: &'a [Vec<i64>],
    norms: Vec<i128>,
    k: &'a [Vec<i64>],
    budget: usize,
    nodes: AtomicUsize,
}

impl<'a> TupleSearch<'a> {
    fn new(rs: &'a RootSystem, roots: &'a [Vec<i64>], k: &'a Gcm, budget: usize) -> Self {
        let norms = roots.iter().map(|r| rs.norm(r)).collect();
        TupleSearch { rs, roots, norms, k: k.matrix(), budget, nodes: AtomicUsize::new(0) }
    }

    /// Whether candidate `c` may sit at position `tuple.len()`.
    fn fits(&self, tuple: &[usize], c: usize) -> bool {
        let pos = tuple.len();
        tuple.iter().enumerate().all(|(i, &t)| {
            if t == c {
                return false;
            }
            let f = self.rs.form(&self.roots[t], &self.roots[c]);
            if 2 * f != self.k[i][pos] as i128 * self.norms[t] || 2 * f != self.k[pos][i] as i128 * self.norms[c] {
                return false;
            }
            let diff: Vec<i64> = self.roots[t].iter().zip(&self.roots[c]).map(|(a, b)| a - b).collect();
            !self.rs.is_root(&diff)
        })
    }

    fn tick(&self) -> Result<()> {
        if self.nodes.fetch_add(1, Ordering::Relaxed) >= self.budget {
            Err(Error::BudgetExceeded(self.budget))
        } else {
            Ok(())
        }
    }

    fn extend(&self, tuple: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) -> Result<()> {
        if tuple.len() == self.k.len() {
            out.push(tuple.clone());
            return Ok(());
        }
        for c in 0..self.roots.len() {
            if self.fits(tuple, c) {
                self.tick()?;
                tuple.push(c);
                self.extend(tuple, out)?;
                tuple.pop();
            }
        }
        Ok(())
    }

    /// All matching tuples, first element forked across workers; order is
    /// that of a sequential depth-first search.
    fn run(&self) -> Result<Vec<Vec<usize>>> {
        let parts: Vec<Result<Vec<Vec<usize>>>> = (0..self.roots.len())
            .into_par_iter()
            .map(|c| {
                let mut out = Vec::new();
                self.tick()?;
                self.extend(&mut vec![c], &mut out)?;
                Ok(out)
            })
            .collect();
        let mut all = Vec::new();
        for p in parts {
            all.extend(p?);
        }
        Ok(all)
    }
}

/// Brute-force oracle: every π-system of type `k` in `z` as a set, grouped
/// into orbits by closure under simple reflections.
pub fn finite_mult_brute(k: &Gcm, z: &Gcm) -> Result<u64> {
    require_finite(k)?;
    require_finite(z)?;
    if k.rank() > z.rank() {
        return Ok(0);
    }
    let rs = RootSystem::new(z.clone())?;
    let roots = all_roots(&rs)?;
    finite_mult_brute_in(&rs, &roots, k)
}

fn finite_mult_brute_in(rs: &RootSystem, roots: &[Vec<i64>], k: &Gcm) -> Result<u64> {
    let tuples = TupleSearch::new(rs, roots, k, usize::MAX).run()?;
    let set_of = |t: &[Vec<i64>]| {
        let mut s = t.to_vec();
        s.sort();
        s
    };
    let sets: HashSet<Vec<Vec<i64>>> =
        tuples.iter().map(|t| set_of(&t.iter().map(|&i| roots[i].clone()).collect::<Vec<_>>())).collect();
    let mut seen: HashSet<Vec<Vec<i64>>> = HashSet::new();
    let mut ordered: Vec<&Vec<Vec<i64>>> = sets.iter().collect();
    ordered.sort();
    let mut orbits = 0;
    for s in ordered {
        if seen.contains(s) {
            continue;
        }
        orbits += 1;
        let mut queue = VecDeque::from([s.clone()]);
        seen.insert(s.clone());
        while let Some(cur) = queue.pop_front() {
            for i in 0..rs.rank() {
                let next = set_of(&cur.iter().map(|r| rs.reflect_simple(i, r)).collect::<Result<Vec<_>>>()?);
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
    }
    Ok(orbits)
}

/// Canonical representative of the `W_J`-orbit of an ordered tuple of
/// roots of finite type: make `t_1` `J`-dominant, shrink `J` to its
/// stabilizer, make `t_2` dominant for that, and so on.
pub fn chain_canonical(rs: &RootSystem, tuple: &[Vec<i64>], j: &[usize]) -> Result<Vec<Vec<i64>>> {
    let mut t = tuple.to_vec();
    let mut j = j.to_vec();
    for pos in 0..t.len() {
        loop {
            let step = j.iter().copied().find(|&i| rs.simple_coroot_pairing(i, &t[pos]) < 0);
            let Some(i) = step else { break };
            for r in t[pos..].iter_mut() {
                *r = rs.reflect_simple(i, r)?;
            }
        }
        j.retain(|&i| rs.simple_coroot_pairing(i, &t[pos]) == 0);
    }
    Ok(t)
}

/// Stabilizer-chain counter: canonical ordered tuples are enumerated
/// directly (each level restricted to roots dominant for the current
/// stabilizer), then glued along relabelings by automorphisms of `k`.
pub fn finite_mult_chain(k: &Gcm, z: &Gcm) -> Result<u64> {
    require_finite(k)?;
    require_finite(z)?;
    if k.rank() > z.rank() {
        return Ok(0);
    }
    let rs = RootSystem::new(z.clone())?;
    let roots = all_roots(&rs)?;
    finite_mult_chain_in(&rs, &roots, k)
}

fn finite_mult_chain_in(rs: &RootSystem, roots: &[Vec<i64>], k: &Gcm) -> Result<u64> {
    let search = TupleSearch::new(rs, roots, k, usize::MAX);
    let mut canon: Vec<Vec<usize>> = Vec::new();
    fn walk(
        s: &TupleSearch,
        rs: &RootSystem,
        j: &[usize],
        tuple: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if tuple.len() == s.k.len() {
            out.push(tuple.clone());
            return;
        }
        for c in 0..s.roots.len() {
            let r = &s.roots[c];
            if j.iter().any(|&i| rs.simple_coroot_pairing(i, r) < 0) || !s.fits(tuple, c) {
                continue;
            }
            let next: Vec<usize> = j.iter().copied().filter(|&i| rs.simple_coroot_pairing(i, r) == 0).collect();
            tuple.push(c);
            walk(s, rs, &next, tuple, out);
            tuple.pop();
        }
    }
    let all: Vec<usize> = (0..rs.rank()).collect();
    walk(&search, rs, &all, &mut Vec::new(), &mut canon);
    let index: HashMap<Vec<Vec<i64>>, usize> = canon
        .iter()
        .enumerate()
        .map(|(n, t)| (t.iter().map(|&i| roots[i].clone()).collect(), n))
        .collect();
    let mut parent: Vec<usize> = (0..canon.len()).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let auts = automorphisms(k);
    for (n, t) in canon.iter().enumerate() {
        for g in &auts {
            let relabeled: Vec<Vec<i64>> = g.iter().map(|&gi| roots[t[gi]].clone()).collect();
            let c = chain_canonical(rs, &relabeled, &all)?;
            let m = *index.get(&c).ok_or_else(|| Error::Internal("relabeled tuple left the chain set".into()))?;
            let (a, b) = (find(&mut parent, n), find(&mut parent, m));
            parent[a.max(b)] = a.min(b);
        }
    }
    Ok((0..canon.len()).filter(|&n| find(&mut parent, n) == n).count() as u64)
}

/// All π-systems of type `k` in `rs` with every element of height at most
/// `h` in absolute value, each listed once (as a set) in a labeling with
/// `M(Σ) = k` exactly.
pub fn enumerate_pi_systems(rs: &Arc<RootSystem>, k: &Gcm, h: i64) -> Result<Vec<PiSystem>> {
    enumerate_pi_systems_budget(rs, k, h, DEFAULT_NODE_BUDGET)
}

pub fn enumerate_pi_systems_budget(rs: &Arc<RootSystem>, k: &Gcm, h: i64, budget: usize) -> Result<Vec<PiSystem>> {
    let pos = rs.enumerate_real_roots(h, budget)?;
    let mut roots = pos.clone();
    roots.extend(pos.iter().map(|r| negate(r)));
    let tuples = TupleSearch::new(rs, &roots, k, budget).run()?;
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for t in tuples {
        let mut key = t.clone();
        key.sort_unstable();
        if seen.insert(key) {
            out.push(check_pi_system(t.iter().map(|&i| roots[i].clone()).collect(), rs)?);
        }
    }
    Ok(out)
}

/// Invariant of the `W(X) × Z_2`-orbit of a π-system of Ext type.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct OrbitClass {
    pub sign: Sign,
    /// The Ext subdiagram `Z` (ambient vertices).
    pub z: Vec<usize>,
    /// Canonical finite part, labeled as the catalog finite type.
    pub finite_orbit_rep: Vec<Vec<i64>>,
}

/// Moves a π-system of Ext type to the normal form
/// `π(Z, Σ̊) = Σ̊ ∪ {δ_Y − θ_Σ̊, α_p}` and reduces `Σ̊` to a canonical
/// representative of its `W(Z̊)`-orbit.
pub fn canonicalize(pi: &PiSystem) -> Result<OrbitClass> {
    let rs = pi.ambient().clone();
    require_simply_laced(rs.gcm())?;
    let kd = ext_type(pi.type_matrix())?;

    let (_, sign, normalized) = pi.sign_normalize()?;
    let positive = if sign == Sign::Negative { normalized.negated() } else { normalized };

    let aff = positive.subsystem(&kd.y)?;
    let (y, w, kinv) = aff.locate_affine_support()?;
    if kinv != 1 {
        return Err(Error::Internal(format!("Ext type forces k = 1, found {kinv}")));
    }
    let moved = positive.apply_word(&w)?;
    let (sigma, p) = reduce_to_simple(&rs, &moved.roots()[kd.p], &y)?;
    let xi = moved.apply_word(&sigma)?;

    let mut z = y.clone();
    z.push(p);
    z.sort_unstable();
    let zd: ExtDecomposition =
        decompose_within(rs.gcm(), &z)?.ok_or_else(|| Error::Internal("reduced support is not Ext".into()))?;
    let finite: Vec<Vec<i64>> = kd.finite_part.iter().map(|&i| xi.roots()[i].clone()).collect();
    if !finite.iter().all(|r| crate::pisystem::supported_in(r, &zd.finite_part)) {
        return Err(Error::Internal("finite part left Z̊".into()));
    }
    let finite_orbit_rep = canonical_finite(&rs, &finite, &zd.finite_part)?;
    Ok(OrbitClass { sign: if sign == Sign::Negative { Sign::Negative } else { Sign::Positive }, z, finite_orbit_rep })
}

/// Least chain-canonical form over all labelings of `set` that realize the
/// catalog matrix of its type.
fn canonical_finite(rs: &RootSystem, set: &[Vec<i64>], j: &[usize]) -> Result<Vec<Vec<i64>>> {
    let block = check_pi_system(set.to_vec(), &Arc::new(rs.clone()))?;
    let m = block.type_matrix();
    let (name, _) = type_name(m).ok_or_else(|| Error::Internal("unnamed finite part".into()))?;
    let target = named_diagram(&name)?;
    // σ with target[σa][σb] = m[a][b]: element a takes label σa
    let sigma = diagram_isomorphic(m, &target).ok_or_else(|| Error::Internal("type lookup".into()))?;
    let mut labeled = vec![Vec::new(); set.len()];
    for (a, &s) in sigma.iter().enumerate() {
        labeled[s] = set[a].clone();
    }
    let mut best: Option<Vec<Vec<i64>>> = None;
    for g in automorphisms(&target) {
        let t: Vec<Vec<i64>> = g.iter().map(|&gi| labeled[gi].clone()).collect();
        let c = chain_canonical(rs, &t, j)?;
        let better = match &best {
            None => true,
            Some(b) => {
                c.iter().zip(b).map(|(x, y)| root_order(x, y)).find(|o| o.is_ne()) == Some(std::cmp::Ordering::Less)
            }
        };
        if better {
            best = Some(c);
        }
    }
    best.ok_or_else(|| Error::Internal("no labeling".into()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrossCheck {
    pub height: i64,
    pub systems: usize,
    pub classes: usize,
    pub value: u64,
    pub agrees: bool,
}

/// Enumerative validation of an Ext multiplicity: count distinct orbit
/// classes among π-systems of type `k` up to height `h`.
pub fn cross_check(k: &Gcm, x: &Gcm, h: i64, opts: &CountOptions) -> Result<CrossCheck> {
    let report = mult(k, x, opts)?;
    let MultValue::Finite(value) = report.value else {
        return Err(Error::NotExtType);
    };
    let rs = Arc::new(RootSystem::new(x.clone())?);
    let systems = enumerate_pi_systems_budget(&rs, k, h, opts.node_budget)?;
    let classes: Vec<OrbitClass> = systems.par_iter().map(canonicalize).collect::<Result<_>>()?;
    let distinct: HashSet<OrbitClass> = classes.into_iter().collect();
    Ok(CrossCheck { height: h, systems: systems.len(), classes: distinct.len(), value, agrees: distinct.len() as u64 == value })
}

/// Finite multiplicities for every pair of connected simply-laced finite
/// types up to `max_rank`, with `rank K ≤ rank Z`.
pub fn generate_table(max_rank: usize) -> Result<Vec<TableEntry>> {
    let mut names = Vec::new();
    for n in 1..=max_rank {
        names.push(format!("A{n}"));
        if n >= 4 {
            names.push(format!("D{n}"));
        }
        if (6..=8).contains(&n) {
            names.push(format!("E{n}"));
        }
    }
    let gcms: Vec<(String, Gcm)> = names.iter().map(|n| Ok((n.clone(), named_diagram(n)?))).collect::<Result<_>>()?;
    let pairs: Vec<(usize, usize)> = (0..gcms.len())
        .flat_map(|a| (0..gcms.len()).map(move |b| (a, b)))
        .filter(|&(a, b)| gcms[a].1.rank() <= gcms[b].1.rank())
        .collect();
    pairs
        .par_iter()
        .map(|&(a, b)| {
            let value = finite_mult(&gcms[a].1, &gcms[b].1)?;
            Ok(TableEntry { k: gcms[a].0.clone(), z: gcms[b].0.clone(), value, oracle: ORACLE_VERSION.into() })
        })
        .collect()
}
