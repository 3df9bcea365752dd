// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! Instance generators: the extremal blow-up of C5, projective-plane
//! incidence graphs, random regular graphs, and random lifts.

use alloc::vec;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{EdgeId, Graph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("invalid generator parameters: {0}")]
    InvalidParameters(&'static str),
    #[error("unsupported projective plane order {0} (expected 2 or 3)")]
    UnsupportedOrder(u32),
    #[error("pairing model produced no simple graph after {retries} retries")]
    PairingFailed { retries: usize },
}

/// Maximum number of pairings tried by [`gen_random_regular`].
pub const PAIRING_RETRIES: usize = 100_000;

/// Deterministic generator for stream `stream` of the 64-bit `seed`.
///
/// Distinct streams of one seed are independent, so a single user seed can
/// feed several consumers without them sharing state.
pub fn seeded_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

pub mod streams {
    pub const REGULAR: u64 = 1;
    pub const LIFT: u64 = 2;
    pub const BOUNDED: u64 = 3;
    pub const ORDER: u64 = 4;
}

/// Blow-up of C5: five independent `t`-sets in a ring, consecutive sets
/// completely joined. Vertex `i * t + j` is the `j`-th copy of ring vertex `i`.
pub fn gen_blowup_c5(t: usize) -> Result<Graph, GenError> {
    if t == 0 {
        return Err(GenError::InvalidParameters("blow-up factor must be positive"));
    }
    let mut g = Graph::new(5 * t);
    for i in 0..5 {
        let next = (i + 1) % 5;
        for a in 0..t {
            for b in 0..t {
                g.add_edge(i * t + a, next * t + b).expect("vertices exist");
            }
        }
    }
    Ok(g)
}

/// Point-line incidence graph of the projective plane over GF(q).
///
/// Points occupy ids `0..q²+q+1`, lines the following block. A point and a
/// line are adjacent iff their homogeneous coordinates are orthogonal.
pub fn gen_incidence_pg(q: u32) -> Result<Graph, GenError> {
    if q != 2 && q != 3 {
        return Err(GenError::UnsupportedOrder(q));
    }
    let q = q as usize;
    // Normalized representatives: first nonzero coordinate equals 1.
    let mut reps: Vec<[usize; 3]> = Vec::new();
    for a in 0..q {
        for b in 0..q {
            for c in 0..q {
                let v = [a, b, c];
                if let Some(&lead) = v.iter().find(|&&x| x != 0) {
                    if lead == 1 {
                        reps.push(v);
                    }
                }
            }
        }
    }
    let n = reps.len();
    let mut g = Graph::new(2 * n);
    for (p, pv) in reps.iter().enumerate() {
        for (l, lv) in reps.iter().enumerate() {
            let dot: usize = pv.iter().zip(lv).map(|(x, y)| x * y).sum();
            if dot.is_multiple_of(q) {
                g.add_edge(p, n + l).expect("vertices exist");
            }
        }
    }
    Ok(g)
}

/// Simple `d`-regular graph on `n` vertices from the pairing model,
/// rejecting pairings that create loops or parallel edges.
pub fn gen_random_regular(d: usize, n: usize, seed: u64) -> Result<Graph, GenError> {
    if !(d * n).is_multiple_of(2) {
        return Err(GenError::InvalidParameters("d * n must be even"));
    }
    if n <= d {
        return Err(GenError::InvalidParameters("n must exceed d"));
    }
    let mut rng = seeded_rng(seed, streams::REGULAR);
    let mut points: Vec<VertexId> = (0..n).flat_map(|v| core::iter::repeat_n(v, d)).collect();
    'retry: for _ in 0..PAIRING_RETRIES {
        points.shuffle(&mut rng);
        let mut seen = vec![false; n * n];
        let mut pairs = Vec::with_capacity(points.len() / 2);
        for p in points.chunks_exact(2) {
            let (a, b) = (p[0].min(p[1]), p[0].max(p[1]));
            if a == b || seen[a * n + b] {
                continue 'retry;
            }
            seen[a * n + b] = true;
            pairs.push((a, b));
        }
        pairs.sort_unstable();
        return Ok(Graph::from_edges(n, &pairs).expect("pairs are valid"));
    }
    Err(GenError::PairingFailed { retries: PAIRING_RETRIES })
}

/// Random `k`-fold lift of `base`: every vertex becomes `k` copies and every
/// edge a random perfect matching between the copies of its endpoints.
/// Lifts keep vertex degrees and never shorten the girth.
pub fn gen_random_lift(base: &Graph, k: usize, seed: u64) -> Result<Graph, GenError> {
    if k == 0 {
        return Err(GenError::InvalidParameters("lift order must be positive"));
    }
    let (base, _, _) = base.compacted();
    let mut rng = seeded_rng(seed, streams::LIFT);
    let mut g = Graph::new(base.vertex_count() * k);
    let mut perm: Vec<usize> = (0..k).collect();
    for (_, [u, v]) in base.edges() {
        perm.shuffle(&mut rng);
        for (i, &j) in perm.iter().enumerate() {
            g.add_edge(u * k + i, v * k + j).expect("vertices exist");
        }
    }
    Ok(g)
}

/// Random multigraph with maximum degree at most `max_degree`: `attempts`
/// random vertex pairs are proposed and kept when both endpoints still have
/// room (and, unless `allow_parallel`, are not yet adjacent).
pub fn gen_random_bounded(
    n: usize,
    attempts: usize,
    max_degree: usize,
    allow_parallel: bool,
    seed: u64,
) -> Graph {
    let mut rng = seeded_rng(seed, streams::BOUNDED);
    let mut g = Graph::new(n);
    if n < 2 {
        return g;
    }
    for _ in 0..attempts {
        let a = rng.gen_range(0..n);
        let b = rng.gen_range(0..n);
        if a == b || g.degree(a) >= max_degree || g.degree(b) >= max_degree {
            continue;
        }
        if !allow_parallel && g.adjacent(a, b) {
            continue;
        }
        g.add_edge(a, b).expect("vertices exist");
    }
    g
}

/// The edge ids of `g` in a random order drawn from `seed`.
pub fn random_edge_order(g: &Graph, seed: u64) -> Vec<EdgeId> {
    let mut order: Vec<EdgeId> = g.edge_ids().collect();
    order.shuffle(&mut seeded_rng(seed, streams::ORDER));
    order
}

/// Small named graphs used as fixtures.
pub mod families {
    use super::*;

    pub fn path(edges: usize) -> Graph {
        let pairs: Vec<_> = (0..edges).map(|i| (i, i + 1)).collect();
        Graph::from_edges(edges + 1, &pairs).expect("valid path")
    }

    pub fn cycle(n: usize) -> Graph {
        let pairs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &pairs).expect("valid cycle")
    }

    /// `K_{1,leaves}` with centre 0.
    pub fn star(leaves: usize) -> Graph {
        let pairs: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Graph::from_edges(leaves + 1, &pairs).expect("valid star")
    }

    pub fn complete(n: usize) -> Graph {
        let mut pairs = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                pairs.push((i, j));
            }
        }
        Graph::from_edges(n, &pairs).expect("valid clique")
    }

    /// `K_{a,b}` with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut pairs = Vec::new();
        for i in 0..a {
            for j in 0..b {
                pairs.push((i, a + j));
            }
        }
        Graph::from_edges(a + b, &pairs).expect("valid biclique")
    }

    pub fn petersen() -> Graph {
        let mut pairs = Vec::new();
        for i in 0..5 {
            pairs.push((i, (i + 1) % 5));
            pairs.push((i, i + 5));
            pairs.push((i + 5, (i + 2) % 5 + 5));
        }
        Graph::from_edges(10, &pairs).expect("valid Petersen graph")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::{girth, is_2k2_free};

    #[test]
    fn blowup_counts() {
        for (t, n, m, d) in [(1, 5, 5, 2), (2, 10, 20, 4), (3, 15, 45, 6)] {
            let g = gen_blowup_c5(t).unwrap();
            assert_eq!((g.vertex_count(), g.edge_count()), (n, m));
            assert!(g.vertices().all(|v| g.degree(v) == d));
            assert!(is_2k2_free(&g));
        }
        assert_eq!(girth(&gen_blowup_c5(1).unwrap()), Some(5));
        assert_eq!(girth(&gen_blowup_c5(2).unwrap()), Some(4));
        assert!(gen_blowup_c5(0).is_err());
    }

    #[test]
    fn incidence_graphs() {
        let heawood = gen_incidence_pg(2).unwrap();
        assert_eq!(heawood.vertex_count(), 14);
        assert!(heawood.vertices().all(|v| heawood.degree(v) == 3));
        assert_eq!(girth(&heawood), Some(6));
        let g = gen_incidence_pg(3).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (26, 52));
        assert!(g.vertices().all(|v| g.degree(v) == 4));
        assert_eq!(girth(&g), Some(6));
        assert_eq!(gen_incidence_pg(5), Err(GenError::UnsupportedOrder(5)));
    }

    #[test]
    fn random_regular_examples() {
        let g = gen_random_regular(4, 10, 7).unwrap();
        assert_eq!(g.edge_count(), 20);
        assert!(g.is_simple());
        let k4 = gen_random_regular(3, 4, 1).unwrap();
        assert_eq!(k4.edge_count(), 6);
        assert!(k4.vertices().all(|v| k4.degree(v) == 3));
        let g = gen_random_regular(4, 9, 0).unwrap();
        assert_eq!(g.edge_count(), 18);
        assert!(g.vertices().all(|v| g.degree(v) == 4));
        assert!(gen_random_regular(3, 5, 0).is_err());
        assert!(gen_random_regular(4, 4, 0).is_err());
        assert_eq!(gen_random_regular(4, 20, 3), gen_random_regular(4, 20, 3));
    }

    #[test]
    fn lifts_keep_degree_and_girth() {
        let base = gen_incidence_pg(3).unwrap();
        let g = gen_random_lift(&base, 3, 11).unwrap();
        assert_eq!(g.edge_count(), 156);
        assert!(g.vertices().all(|v| g.degree(v) == 4));
        assert!(girth(&g).unwrap() >= 6);
    }
}
