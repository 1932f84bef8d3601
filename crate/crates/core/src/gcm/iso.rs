//! Isomorphism of Dynkin diagrams given as GCMs.
//!
//! Vertices are colored by iterated refinement of the multiset of
//! `(a_ij, a_ji, color_j)` over their neighbors (shared palette for both
//! diagrams), then a backtracking search assigns vertices class by class.

use std::collections::BTreeMap;

use super::Gcm;

type Signature = (u32, Vec<(i64, i64, u32)>);

fn refine_colors(gs: &[&Gcm]) -> Vec<Vec<u32>> {
    let mut colors: Vec<Vec<u32>> = gs.iter().map(|g| vec![0; g.rank()]).collect();
    let mut classes = 1usize;
    loop {
        let mut palette: BTreeMap<Signature, u32> = BTreeMap::new();
        let sigs: Vec<Vec<Signature>> = gs
            .iter()
            .zip(&colors)
            .map(|(g, c)| {
                (0..g.rank())
                    .map(|i| {
                        let mut nb: Vec<(i64, i64, u32)> =
                            g.neighbors(i).map(|j| (g.entry(i, j), g.entry(j, i), c[j])).collect();
                        nb.sort_unstable();
                        (c[i], nb)
                    })
                    .collect()
            })
            .collect();
        for s in sigs.iter().flatten() {
            let next = palette.len() as u32;
            palette.entry(s.clone()).or_insert(next);
        }
        // ids in sorted-signature order so both diagrams agree
        let ids: BTreeMap<&Signature, u32> = palette.keys().enumerate().map(|(k, s)| (s, k as u32)).collect();
        colors = sigs.iter().map(|v| v.iter().map(|s| ids[s]).collect()).collect();
        if palette.len() == classes {
            return colors;
        }
        classes = palette.len();
    }
}

struct Search<'a> {
    a: &'a Gcm,
    b: &'a Gcm,
    ca: Vec<u32>,
    cb: Vec<u32>,
    order: Vec<usize>,
    map: Vec<Option<usize>>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn consistent(&self, i: usize, t: usize) -> bool {
        if self.ca[i] != self.cb[t] {
            return false;
        }
        self.order.iter().all(|&k| match self.map[k] {
            Some(s) => self.a.entry(i, k) == self.b.entry(t, s) && self.a.entry(k, i) == self.b.entry(s, t),
            None => true,
        })
    }

    fn run(&mut self, depth: usize, all: bool, out: &mut Vec<Vec<usize>>) -> bool {
        if depth == self.order.len() {
            out.push(self.map.iter().map(|m| m.unwrap()).collect());
            return !all;
        }
        let i = self.order[depth];
        for t in 0..self.b.rank() {
            if self.used[t] || !self.consistent(i, t) {
                continue;
            }
            self.map[i] = Some(t);
            self.used[t] = true;
            if self.run(depth + 1, all, out) {
                return true;
            }
            self.map[i] = None;
            self.used[t] = false;
        }
        false
    }
}

fn search(a: &Gcm, b: &Gcm, all: bool) -> Vec<Vec<usize>> {
    if a.rank() != b.rank() {
        return Vec::new();
    }
    let colors = refine_colors(&[a, b]);
    let (ca, cb) = (colors[0].clone(), colors[1].clone());
    let mut sa = ca.clone();
    let mut sb = cb.clone();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return Vec::new();
    }
    // rarest colors first, then stay connected to already placed vertices
    let freq = |c: u32| ca.iter().filter(|&&x| x == c).count();
    let n = a.rank();
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    while order.len() < n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .min_by_key(|&v| {
                let attached = order.iter().any(|&u| a.entry(u, v) != 0);
                (!attached && !order.is_empty(), freq(ca[v]), v)
            })
            .unwrap();
        placed[next] = true;
        order.push(next);
    }
    let mut s = Search { a, b, ca, cb, order, map: vec![None; n], used: vec![false; n] };
    let mut out = Vec::new();
    s.run(0, all, &mut out);
    out
}

/// A bijection `sigma` with `b[sigma i][sigma j] = a[i][j]`, if one exists.
pub fn diagram_isomorphic(a: &Gcm, b: &Gcm) -> Option<Vec<usize>> {
    search(a, b, false).into_iter().next()
}

/// Every diagram automorphism of `a`, identity first.
pub fn automorphisms(a: &Gcm) -> Vec<Vec<usize>> {
    let mut all = search(a, a, true);
    all.sort();
    all
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gcm::named_diagram;

    #[test]
    fn swap_of_a2() {
        let a = Gcm::new(vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]]).unwrap();
        let b = Gcm::new(vec![vec![2, -1, -1], vec![-1, 2, 0], vec![-1, 0, 2]]).unwrap();
        let s = diagram_isomorphic(&a, &b).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(b.entry(s[i], s[j]), a.entry(i, j));
            }
        }
    }

    #[test]
    fn non_isomorphic() {
        let a3 = named_diagram("A3").unwrap();
        let a1a2 = Gcm::new(vec![vec![2, 0, 0], vec![0, 2, -1], vec![0, -1, 2]]).unwrap();
        assert_eq!(diagram_isomorphic(&a3, &a1a2), None);
        let b2 = named_diagram("B2").unwrap();
        let c2 = named_diagram("C2").unwrap();
        // B2 and C2 differ only by vertex order
        assert!(diagram_isomorphic(&b2, &c2).is_some());
        assert_eq!(diagram_isomorphic(&b2, &named_diagram("A2").unwrap()), None);
    }

    #[test]
    fn automorphism_counts() {
        assert_eq!(automorphisms(&named_diagram("D4").unwrap()).len(), 6);
        assert_eq!(automorphisms(&named_diagram("A5").unwrap()).len(), 2);
        assert_eq!(automorphisms(&named_diagram("E8").unwrap()).len(), 1);
        assert_eq!(automorphisms(&named_diagram("A1").unwrap()), vec![vec![0]]);
        // the 5-cycle A4~
        assert_eq!(automorphisms(&named_diagram("A4~").unwrap()).len(), 10);
    }
}
