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

//! Step log of a [`solve21`](super::solve21) run.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{EdgeId, VertexId};
use crate::structure::ConfigurationKind;

/// How the uncolored edges around a deleted configuration were finished.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Completion {
    Sdr,
    Pairing,
    Search,
    Recolor,
    Failed,
}

impl Completion {
    pub fn name(self) -> &'static str {
        match self {
            Completion::Sdr => "sdr",
            Completion::Pairing => "pairing",
            Completion::Search => "search",
            Completion::Recolor => "recolor",
            Completion::Failed => "failed",
        }
    }
}

/// The structural case selected for coloring the two sides of a partition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CaseLabel {
    /// A hub has children on both outer sides and none in the middle.
    SplitBranch,
    /// No dense middle vertex; the far child of `w₁` has one far edge.
    SparseShared,
    /// No dense middle vertex; the far child of `w₁` has two far edges.
    SparseTwoEdge,
    /// No dense middle vertex and `w₁` is on the far side.
    SparseOffW,
    /// A dense middle vertex with a sibling on the far side.
    DenseSiblingFar,
    /// A dense middle vertex with a sibling on the near side.
    DenseSiblingNear,
    /// Dense, every sibling in the middle, second children split.
    DenseMixed,
    /// Dense, every sibling in the middle, second children near.
    DenseAllNear,
    /// Dense, every sibling in the middle, second children far.
    DenseAllFar,
}

impl CaseLabel {
    pub const ALL: [CaseLabel; 9] = [
        CaseLabel::SplitBranch,
        CaseLabel::SparseShared,
        CaseLabel::SparseTwoEdge,
        CaseLabel::SparseOffW,
        CaseLabel::DenseSiblingFar,
        CaseLabel::DenseSiblingNear,
        CaseLabel::DenseMixed,
        CaseLabel::DenseAllNear,
        CaseLabel::DenseAllFar,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CaseLabel::SplitBranch => "split-branch",
            CaseLabel::SparseShared => "sparse-shared",
            CaseLabel::SparseTwoEdge => "sparse-two-edge",
            CaseLabel::SparseOffW => "sparse-off-w",
            CaseLabel::DenseSiblingFar => "dense-sibling-far",
            CaseLabel::DenseSiblingNear => "dense-sibling-near",
            CaseLabel::DenseMixed => "dense-mixed",
            CaseLabel::DenseAllNear => "dense-all-near",
            CaseLabel::DenseAllFar => "dense-all-far",
        }
    }
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Why a step abandoned its prescribed move.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FallbackReason {
    LowDegree { edge: EdgeId },
    MultiEdge { edge: EdgeId },
    SmallCut,
    ShortCycle(ConfigurationKind),
    Sequence { edge: EdgeId },
    Partition(&'static str),
    Collaborative { case: Option<CaseLabel>, detail: String },
}

impl fmt::Display for FallbackReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FallbackReason::LowDegree { edge } => write!(f, "low-degree edge={edge}"),
            FallbackReason::MultiEdge { edge } => write!(f, "multi-edge edge={edge}"),
            FallbackReason::SmallCut => f.write_str("small-cut"),
            FallbackReason::ShortCycle(kind) => write!(f, "short-cycle kind={kind}"),
            FallbackReason::Sequence { edge } => write!(f, "sequence edge={edge}"),
            FallbackReason::Partition(check) => write!(f, "partition check={check}"),
            FallbackReason::Collaborative { case, detail } => {
                let name = case.map_or("none", CaseLabel::name);
                write!(f, "collaborative case={name} detail={detail}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Step {
    BaseCase { colors: usize },
    Components { count: usize },
    LowDegree { vertex: VertexId },
    MultiEdge { edge: EdgeId },
    SmallCut { cut_edges: Vec<EdgeId> },
    ShortCycle { kind: ConfigurationKind, embedding: Vec<VertexId>, strategy: Completion },
    Sequence { anchor: VertexId, length: usize, covers: bool },
    Partition { anchor: VertexId, l: usize, m: usize, r: usize, f: usize },
    Collaborative { case: CaseLabel },
    SdrCall { targets: usize, ok: bool },
    /// A claimed lower bound on an availability that did not hold.
    CountCheck { context: &'static str, edge: EdgeId, claimed: usize, actual: usize },
    Fallback { reason: FallbackReason },
}

impl Step {
    pub fn tag(&self) -> &'static str {
        match self {
            Step::BaseCase { .. } => "base-case",
            Step::Components { .. } => "components",
            Step::LowDegree { .. } => "low-degree",
            Step::MultiEdge { .. } => "multi-edge",
            Step::SmallCut { .. } => "small-cut",
            Step::ShortCycle { .. } => "short-cycle",
            Step::Sequence { .. } => "sequence",
            Step::Partition { .. } => "partition",
            Step::Collaborative { .. } => "collaborative",
            Step::SdrCall { .. } => "sdr",
            Step::CountCheck { .. } => "count-check",
            Step::Fallback { .. } => "FALLBACK",
        }
    }
}

fn write_list<T: fmt::Display>(f: &mut fmt::Formatter<'_>, items: &[T]) -> fmt::Result {
    f.write_str("[")?;
    for (i, x) in items.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    f.write_str("]")
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())?;
        match self {
            Step::BaseCase { colors } => write!(f, " colors={colors}"),
            Step::Components { count } => write!(f, " count={count}"),
            Step::LowDegree { vertex } => write!(f, " v={vertex}"),
            Step::MultiEdge { edge } => write!(f, " e={edge}"),
            Step::SmallCut { cut_edges } => {
                f.write_str(" cut=")?;
                write_list(f, cut_edges)
            }
            Step::ShortCycle { kind, embedding, strategy } => {
                write!(f, " kind={kind} embedding=")?;
                write_list(f, embedding)?;
                write!(f, " strategy={}", strategy.name())
            }
            Step::Sequence { anchor, length, covers } => {
                write!(f, " x={anchor} len={length} covers={covers}")
            }
            Step::Partition { anchor, l, m, r, f: cut } => {
                write!(f, " x={anchor} |L|={l} |M|={m} |R|={r} |F|={cut}")
            }
            Step::Collaborative { case } => write!(f, " case={case}"),
            Step::SdrCall { targets, ok } => write!(f, " targets={targets} ok={ok}"),
            Step::CountCheck { context, edge, claimed, actual } => {
                write!(f, " at={context} e={edge} claimed>={claimed} actual={actual}")
            }
            Step::Fallback { reason } => write!(f, " {reason}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceEntry {
    pub depth: usize,
    pub step: Step,
    pub vertices: usize,
    pub edges: usize,
}

impl fmt::Display for TraceEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} |V|={} |E|={}", self.depth, self.step, self.vertices, self.edges)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Trace {
    pub entries: Vec<TraceEntry>,
}

impl Trace {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn fallback_count(&self) -> usize {
        self.fallbacks().count()
    }

    pub fn fallbacks(&self) -> impl Iterator<Item = &TraceEntry> {
        self.entries.iter().filter(|e| matches!(e.step, Step::Fallback { .. }))
    }

    /// Count checks whose claimed bound did not hold.
    pub fn findings(&self) -> impl Iterator<Item = &TraceEntry> {
        self.entries.iter().filter(|e| matches!(e.step, Step::CountCheck { .. }))
    }

    pub fn cases(&self) -> impl Iterator<Item = CaseLabel> + '_ {
        self.entries.iter().filter_map(|e| match e.step {
            Step::Collaborative { case } => Some(case),
            _ => None,
        })
    }

    pub fn tags(&self) -> Vec<&'static str> {
        self.entries.iter().map(|e| e.step.tag()).collect()
    }
}

impl fmt::Display for Trace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for entry in &self.entries {
            writeln!(f, "{entry}")?;
        }
        Ok(())
    }
}
