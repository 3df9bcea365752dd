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

//! Every case of the two-sided coloring on graphs built to reach it.

mod common;

use common::{pocket_by_counts, pocket_sparse, Sparse};
use strongedge_core::reduce::{build_partition, build_precolor_and_sequence, CaseLabel, Region};
use strongedge_core::structure::girth;
use strongedge_core::{solve21, Graph};

/// Partition properties recomputed from the sequence plan alone.
fn assert_partition_sound(g: &Graph) {
    let plan = build_precolor_and_sequence(g, 0).unwrap();
    let part = build_partition(g, &plan).unwrap();
    let uncovered = plan.uncovered(g);
    let mut l: Vec<_> = uncovered.iter().flat_map(|&e| g.endpoints(e).unwrap()).collect();
    l.sort_unstable();
    l.dedup();
    assert_eq!(part.l, l);
    let in_l = |v| l.binary_search(&v).is_ok();
    let mut inside: Vec<_> = g.edges().filter(|&(_, [a, b])| in_l(a) && in_l(b)).map(|(e, _)| e).collect();
    inside.sort_unstable();
    let mut h = uncovered.clone();
    h.sort_unstable();
    assert_eq!(inside, h);
    for (_, [a, b]) in g.edges() {
        let pair = (part.region(a), part.region(b));
        assert!(pair != (Region::L, Region::R) && pair != (Region::R, Region::L));
    }
    for &e in &part.f {
        let [a, b] = g.endpoints(e).unwrap();
        assert!(part.a.contains(&a) != part.a.contains(&b));
    }
    for &v in &part.l {
        let cut = g.incident(v).iter().filter(|e| part.f.contains(e)).count();
        assert!(cut <= 1);
    }
}

fn check(g: Graph, want: CaseLabel) {
    assert_eq!(girth(&g), Some(6));
    assert!(g.vertices().all(|v| g.degree(v) == 4));
    assert_partition_sound(&g);
    let sol = solve21(&g).unwrap();
    assert_eq!(strongedge_core::verify_complete(&g, &sol.coloring), Ok(()));
    assert_eq!(sol.trace.cases().collect::<Vec<_>>(), [want]);
    assert_eq!(sol.trace.fallback_count(), 0);
}

#[test]
fn split_branch() {
    check(pocket_by_counts(6, [3, 0, 0, 2, 0, 0, 1], 0).unwrap(), CaseLabel::SplitBranch);
}

#[test]
fn sparse_shared() {
    check(pocket_sparse(Sparse::Shared, 0).unwrap(), CaseLabel::SparseShared);
}

#[test]
fn sparse_two_edge() {
    check(pocket_sparse(Sparse::TwoEdge, 0).unwrap(), CaseLabel::SparseTwoEdge);
}

#[test]
fn sparse_off_w() {
    check(pocket_sparse(Sparse::OffW, 1).unwrap(), CaseLabel::SparseOffW);
}

#[test]
fn dense_sibling_far() {
    check(pocket_by_counts(6, [2, 0, 0, 0, 0, 0, 2], 0).unwrap(), CaseLabel::DenseSiblingFar);
}

#[test]
fn dense_sibling_near() {
    check(pocket_by_counts(6, [2, 3, 1, 0, 0, 0, 0], 0).unwrap(), CaseLabel::DenseSiblingNear);
}

#[test]
fn dense_mixed() {
    check(pocket_by_counts(6, [1, 2, 1, 2, 1, 2, 1], 0).unwrap(), CaseLabel::DenseMixed);
}

#[test]
fn dense_all_near() {
    check(pocket_by_counts(6, [2; 7], 0).unwrap(), CaseLabel::DenseAllNear);
}

#[test]
fn dense_all_far() {
    check(pocket_by_counts(6, [1, 1, 1, 1, 1, 1, 2], 0).unwrap(), CaseLabel::DenseAllFar);
}
