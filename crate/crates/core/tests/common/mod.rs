//! Brute-force reference implementations, written against plain adjacency
//! lists and sharing no code with the crate under test.
#![allow(dead_code)]

use proptest::prelude::*;
use sigdom::{BoundName, Graph};

/// Closed neighborhoods as sorted vectors.
pub struct Ref {
    pub n: usize,
    pub closed: Vec<Vec<usize>>,
}

impl Ref {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut closed: Vec<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
        for &(u, v) in edges {
            closed[u].push(v);
            closed[v].push(u);
        }
        for c in &mut closed {
            c.sort_unstable();
        }
        Ref { n, closed }
    }

    pub fn of(g: &Graph) -> Self {
        let edges: Vec<_> = g.edges().collect();
        Ref::new(g.n(), &edges)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.closed[v].len() - 1
    }

    fn hits(&self, v: usize, set: &[bool]) -> usize {
        self.closed[v].iter().filter(|&&u| set[u]).count()
    }

    /// Minimum weight and the first optimal labeling when labelings are
    /// listed in lexicographic order with `-1` before `+1`.
    pub fn signed_domination(&self) -> (i64, Vec<i8>) {
        let mut best: Option<(i64, Vec<i8>)> = None;
        let mut labels = vec![-1i8; self.n];
        loop {
            let ok = (0..self.n).all(|v| {
                self.closed[v].iter().map(|&u| labels[u] as i64).sum::<i64>() >= 1
            });
            if ok {
                let w: i64 = labels.iter().map(|&x| x as i64).sum();
                if best.as_ref().is_none_or(|(bw, _)| w < *bw) {
                    best = Some((w, labels.clone()));
                }
            }
            // advance in lexicographic order, -1 < +1
            let Some(i) = (0..self.n).rev().find(|&i| labels[i] == -1) else {
                break;
            };
            labels[i] = 1;
            for l in &mut labels[i + 1..] {
                *l = -1;
            }
        }
        best.expect("all +1 is valid")
    }

    /// First subset in (size, lexicographic) order accepted by `ok`, scanning
    /// sizes in the given order.
    fn first_subset(&self, sizes: Vec<usize>, ok: impl Fn(&[bool]) -> bool) -> Option<Vec<usize>> {
        for t in sizes {
            let mut found = None;
            combinations(self.n, t, &mut |c| {
                let mut set = vec![false; self.n];
                for &v in c {
                    set[v] = true;
                }
                if ok(&set) {
                    found = Some(c.to_vec());
                    true
                } else {
                    false
                }
            });
            if found.is_some() {
                return found;
            }
        }
        None
    }

    pub fn tuple_domination(&self, k: usize) -> Vec<usize> {
        self.first_subset((0..=self.n).collect(), |s| (0..self.n).all(|v| self.hits(v, s) >= k))
            .expect("k <= δ + 1")
    }

    pub fn domination(&self) -> Vec<usize> {
        self.tuple_domination(1)
    }

    pub fn limited_packing(&self, k: usize) -> Vec<usize> {
        self.first_subset((0..=self.n).rev().collect(), |s| (0..self.n).all(|v| self.hits(v, s) <= k))
            .expect("the empty set qualifies")
    }

    /// Pairwise disjoint closed neighborhoods.
    pub fn packing(&self) -> Vec<usize> {
        self.first_subset((0..=self.n).rev().collect(), |s| {
            let members: Vec<usize> = (0..self.n).filter(|&v| s[v]).collect();
            members.iter().enumerate().all(|(i, &a)| {
                members[i + 1..]
                    .iter()
                    .all(|&b| !self.closed[a].iter().any(|x| self.closed[b].contains(x)))
            })
        })
        .unwrap()
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &u in &self.closed[v] {
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    pub fn leaves(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.degree(v) == 1).collect()
    }

    pub fn supports(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&v| self.closed[v].iter().any(|&u| u != v && self.degree(u) == 1))
            .collect()
    }

    /// Vertices that are not isolated, not leaves and not supports.
    pub fn core(&self) -> Vec<usize> {
        let supports = self.supports();
        (0..self.n)
            .filter(|&v| self.degree(v) >= 2 && !supports.contains(&v))
            .collect()
    }
}

/// Calls `f` on every `t`-subset of `0..n` in lexicographic order until it
/// returns `true`.
pub fn combinations(n: usize, t: usize, f: &mut dyn FnMut(&[usize]) -> bool) {
    fn rec(start: usize, n: usize, t: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if cur.len() == t {
            return f(cur);
        }
        for v in start..n {
            if n - v < t - cur.len() {
                break;
            }
            cur.push(v);
            if rec(v + 1, n, t, cur, f) {
                return true;
            }
            cur.pop();
        }
        false
    }
    rec(0, n, t, &mut Vec::new(), f);
}

/// An exact fraction `num/den` with `den > 0`.
#[derive(Clone, Copy, Debug)]
pub struct Frac(pub i64, pub i64);

impl Frac {
    pub fn ceil(self) -> i64 {
        self.0.div_euclid(self.1) + (self.0.rem_euclid(self.1) != 0) as i64
    }

    pub fn floor(self) -> i64 {
        self.0.div_euclid(self.1)
    }

    pub fn ge(self, other: Frac) -> bool {
        self.0 * other.1 >= other.0 * self.1
    }

    pub fn to_rational(self) -> sigdom::Rational {
        sigdom::Rational::new(self.0, self.1)
    }
}

pub fn ceil_div(a: i64, b: i64) -> i64 {
    Frac(a, b).ceil()
}

/// Smallest integer `>= x` with the parity of `n`.
pub fn tighten_lower(x: Frac, n: usize) -> i64 {
    let c = x.ceil();
    if (c - n as i64).rem_euclid(2) == 0 { c } else { c + 1 }
}

/// Largest integer `<= x` with the parity of `n`.
pub fn tighten_upper(x: Frac, n: usize) -> i64 {
    let f = x.floor();
    if (f - n as i64).rem_euclid(2) == 0 { f } else { f - 1 }
}

/// Random simple graphs on `1..=max_n` vertices.
pub fn arb_graph(max_n: usize) -> impl Strategy<Value = (usize, Vec<(usize, usize)>)> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let len = pairs.len();
        proptest::collection::vec(any::<bool>(), len).prop_map(move |mask| {
            let edges = pairs
                .iter()
                .zip(mask)
                .filter(|(_, keep)| *keep)
                .map(|(&e, _)| e)
                .collect();
            (n, edges)
        })
    })
}

/// Random connected graphs: a random spanning tree plus random extra edges.
pub fn arb_connected(min_n: usize, max_n: usize) -> impl Strategy<Value = (usize, Vec<(usize, usize)>)> {
    (min_n..=max_n).prop_flat_map(|n| {
        let parents: Vec<BoxedStrategy<usize>> = (1..n).map(|v| (0..v).boxed()).collect();
        let pairs = n * (n - 1) / 2;
        (Just(n), parents, proptest::collection::vec(0u8..4, pairs)).prop_map(|(n, parents, extra)| {
            let mut edges: Vec<(usize, usize)> = parents.iter().enumerate().map(|(i, &p)| (p, i + 1)).collect();
            let mut idx = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if extra[idx] == 0 && !edges.contains(&(u, v)) {
                        edges.push((u, v));
                    }
                    idx += 1;
                }
            }
            (n, edges)
        })
    })
}

pub fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::from_edges(n, edges.iter().copied()).unwrap()
}

pub fn path(n: usize) -> Vec<(usize, usize)> {
    (1..n).map(|v| (v - 1, v)).collect()
}

pub fn cycle(n: usize) -> Vec<(usize, usize)> {
    let mut e = path(n);
    e.push((0, n - 1));
    e
}

pub fn complete(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

pub fn star(n: usize) -> Vec<(usize, usize)> {
    (1..n).map(|v| (0, v)).collect()
}

/// Textbook graph6 encoder, for cross-checking the codec.
pub fn graph6(n: usize, edges: &[(usize, usize)]) -> String {
    assert!(n <= 62);
    let mut bits = Vec::new();
    for j in 1..n {
        for i in 0..j {
            bits.push(edges.contains(&(i, j)) || edges.contains(&(j, i)));
        }
    }
    while bits.len() % 6 != 0 {
        bits.push(false);
    }
    let mut out = String::new();
    out.push((63 + n as u8) as char);
    for chunk in bits.chunks(6) {
        let v = chunk.iter().fold(0u8, |acc, &b| acc << 1 | b as u8);
        out.push((63 + v) as char);
    }
    out
}

/// Every bound formula, evaluated from scratch on the reference graph.
/// `None` marks an inapplicable bound.
pub fn reference_bounds(r: &Ref, rho: usize, gamma: usize) -> Vec<(BoundName, Option<Frac>)> {
    let n = r.n as i64;
    let degrees: Vec<i64> = (0..r.n).map(|v| r.degree(v) as i64).collect();
    let delta = *degrees.iter().min().unwrap();
    let big = *degrees.iter().max().unwrap();
    let leaves = r.leaves().len() as i64;
    let supports = r.supports().len() as i64;
    let odd = degrees.iter().filter(|d| *d % 2 == 1).count() as i64;
    let core_delta = r.core().iter().map(|&v| degrees[v]).min();
    let tree = r.is_connected() && degrees.iter().sum::<i64>() == 2 * (n - 1);
    if !r.is_connected() {
        return BoundName::ALL.iter().map(|&b| (b, None)).collect();
    }

    let packing = (delta >= 2).then(|| Frac(n - 2 * ((2 * rho as i64 + delta - 2) / 2), 1));
    let degree_leaves = core_delta.map(|dc| {
        let (a, b) = (ceil_div(dc, 2), big / 2);
        Frac((a - b + 1) * n + 2 * b * leaves, a + b + 1)
    });
    let degree_parity = core_delta.map(|dc| {
        let (a, b) = (ceil_div(3 * dc, 2), (3 * big) / 2);
        Frac((a - b + 3) * n + 2 * ((big / 2) * leaves + odd), a + b + 3)
    });
    let domination = Frac(-n + 2 * ceil_div(big + 2, 2).max(ceil_div(delta + 2 * gamma as i64, 2)), 1);
    let (core, support, order) = if tree && n >= 2 {
        let core = match core_delta {
            Some(dc) => {
                let h = ceil_div(dc, 2);
                Frac((2 * h - 1) * n + 2 * (leaves - supports + 2), 2 * h + 1)
            }
            None => Frac(n, 1),
        };
        (Some(core), Some(Frac(n + 4 + 2 * (leaves - supports), 3)), Some(Frac(n + 4, 3)))
    } else {
        (None, None, None)
    };
    vec![
        (BoundName::PackingUpper, packing),
        (BoundName::DegreeLeavesLower, degree_leaves),
        (BoundName::DegreeParityLower, degree_parity),
        (BoundName::DominationLower, Some(domination)),
        (BoundName::TreeCoreLower, core),
        (BoundName::TreeSupportLower, support),
        (BoundName::TreeOrderLower, order),
    ]
}
