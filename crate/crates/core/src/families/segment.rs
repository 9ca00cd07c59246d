//! Alternated segments and their sums.
//!
//! A segment on consecutive integers has its even labels in `L` and arcs
//! from every even label to each adjacent odd label. Odd-length segments
//! come in two classes: `Minus` (both endpoints in `R`) and `Plus` (both
//! endpoints in `L`).

use std::fmt;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::bitset::VertexSet;
use crate::graph::{GameGraph, GraphDoc, Side};

use super::FamilyError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OddClass {
    None,
    Minus,
    Plus,
}

impl OddClass {
    pub fn negated(self) -> OddClass {
        match self {
            OddClass::None => OddClass::None,
            OddClass::Minus => OddClass::Plus,
            OddClass::Plus => OddClass::Minus,
        }
    }

    /// The class a segment of `len` vertices gets when odd lengths default
    /// to `Minus`.
    pub fn default_for(len: usize) -> OddClass {
        if len.is_multiple_of(2) {
            OddClass::None
        } else {
            OddClass::Minus
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SegmentDescriptor {
    pub len: usize,
    pub class: OddClass,
}

impl SegmentDescriptor {
    /// Validates parity; length 1 is accepted here (a lone forced vertex)
    /// and rejected by the graph builders.
    pub fn new(len: usize, class: OddClass) -> Result<Self, FamilyError> {
        if len == 0 || len.is_multiple_of(2) != (class == OddClass::None) {
            return Err(FamilyError::ClassParity { len, class });
        }
        Ok(SegmentDescriptor { len, class })
    }

    pub fn even(len: usize) -> Self {
        Self::new(len, OddClass::None).expect("even length")
    }

    pub fn minus(len: usize) -> Self {
        Self::new(len, OddClass::Minus).expect("odd length")
    }

    pub fn plus(len: usize) -> Self {
        Self::new(len, OddClass::Plus).expect("odd length")
    }

    /// Label of the first vertex: 0 for `Plus`, 1 otherwise.
    pub fn first_label(&self) -> usize {
        match self.class {
            OddClass::Plus => 0,
            _ => 1,
        }
    }

    /// Color of the vertex at offset `i`.
    pub fn color_at(&self, i: usize) -> Side {
        if (self.first_label() + i).is_multiple_of(2) {
            Side::Left
        } else {
            Side::Right
        }
    }

    pub fn count(&self, side: Side) -> usize {
        (0..self.len).filter(|&i| self.color_at(i) == side).count()
    }

    pub fn negated(&self) -> Self {
        SegmentDescriptor {
            len: self.len,
            class: self.class.negated(),
        }
    }

    /// The descriptor of the `len`-vertex piece starting at offset `start`.
    pub fn piece(&self, start: usize, len: usize) -> SegmentDescriptor {
        let class = if len.is_multiple_of(2) {
            OddClass::None
        } else if self.color_at(start) == Side::Left {
            OddClass::Plus
        } else {
            OddClass::Minus
        };
        SegmentDescriptor { len, class }
    }

    pub(crate) fn code(&self) -> u16 {
        let plus = u16::from(self.class == OddClass::Plus);
        (self.len as u16) * 2 + plus
    }

    pub(crate) fn from_code(code: u16) -> Self {
        let len = (code / 2) as usize;
        let class = if len.is_multiple_of(2) {
            OddClass::None
        } else if code % 2 == 1 {
            OddClass::Plus
        } else {
            OddClass::Minus
        };
        SegmentDescriptor { len, class }
    }
}

impl fmt::Display for SegmentDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.class {
            OddClass::None => write!(f, "S{}", self.len),
            OddClass::Minus => write!(f, "S{}-", self.len),
            OddClass::Plus => write!(f, "S{}+", self.len),
        }
    }
}

/// Which of the three sub-families a sum of segments belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ConfigClass {
    /// Every segment even.
    Balanced,
    /// Exactly one odd segment, one more L than R.
    PlusOne,
    /// Exactly one odd segment, one more R than L.
    MinusOne,
    /// Several odd segments.
    Other,
}

/// A multiset of segments, kept sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SegmentConfig {
    parts: Vec<SegmentDescriptor>,
}

impl SegmentConfig {
    pub fn new(mut parts: Vec<SegmentDescriptor>) -> Self {
        parts.sort();
        SegmentConfig { parts }
    }

    pub fn single(d: SegmentDescriptor) -> Self {
        SegmentConfig { parts: vec![d] }
    }

    pub fn parts(&self) -> &[SegmentDescriptor] {
        &self.parts
    }

    pub fn total_len(&self) -> usize {
        self.parts.iter().map(|d| d.len).sum()
    }

    pub fn count(&self, side: Side) -> usize {
        self.parts.iter().map(|d| d.count(side)).sum()
    }

    pub fn class(&self) -> ConfigClass {
        let odd: Vec<_> = self.parts.iter().filter(|d| d.len % 2 == 1).collect();
        match odd.as_slice() {
            [] => ConfigClass::Balanced,
            [d] if d.class == OddClass::Plus => ConfigClass::PlusOne,
            [_] => ConfigClass::MinusOne,
            _ => ConfigClass::Other,
        }
    }

    pub fn negated(&self) -> SegmentConfig {
        SegmentConfig::new(self.parts.iter().map(|d| d.negated()).collect())
    }

    pub fn sum(&self, other: &SegmentConfig) -> SegmentConfig {
        SegmentConfig::new(self.parts.iter().chain(&other.parts).copied().collect())
    }

    pub(crate) fn codes(&self) -> SmallVec<[u16; 8]> {
        self.parts.iter().map(|d| d.code()).collect()
    }

    /// Builds the graph, segments laid out left to right. Length-1 parts
    /// are rejected.
    pub fn to_doc(&self) -> Result<GraphDoc, FamilyError> {
        let mut colors = Vec::new();
        let mut arcs = Vec::new();
        let mut ids = Vec::new();
        let mut next_label = 0u64;
        for d in &self.parts {
            if d.len < 2 {
                return Err(FamilyError::TooShort { len: d.len, min: 2 });
            }
            let base = colors.len();
            // keep labels' parity so that L stays on even labels
            if next_label % 2 != d.first_label() as u64 % 2 {
                next_label += 1;
            }
            for i in 0..d.len {
                colors.push(d.color_at(i));
                ids.push(next_label + i as u64);
                if d.color_at(i) == Side::Left {
                    if i > 0 {
                        arcs.push((base + i, base + i - 1));
                    }
                    if i + 1 < d.len {
                        arcs.push((base + i, base + i + 1));
                    }
                }
            }
            next_label += d.len as u64 + 1;
        }
        let graph = GameGraph::new(colors, arcs).expect("segment graph is well formed");
        Ok(GraphDoc {
            graph,
            ids,
            duplicate_arcs: 0,
        })
    }

    pub fn to_graph(&self) -> Result<GameGraph, FamilyError> {
        Ok(self.to_doc()?.graph)
    }
}

impl fmt::Display for SegmentConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        for (i, d) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

/// A segment of `n` vertices, labelled from 1 (from 0 for `Plus`).
pub fn make_segment(n: usize, class: OddClass) -> Result<GameGraph, FamilyError> {
    Ok(segment_doc(n, class)?.graph)
}

pub fn segment_doc(n: usize, class: OddClass) -> Result<GraphDoc, FamilyError> {
    let d = SegmentDescriptor::new(n, class)?;
    if n < 2 {
        return Err(FamilyError::TooShort { len: n, min: 2 });
    }
    SegmentConfig::single(d).to_doc()
}

/// An even segment `[1, n]` closed by the arc from its L-endpoint `n` to its
/// R-endpoint `1`.
pub fn make_cycle(n: usize) -> Result<GameGraph, FamilyError> {
    Ok(cycle_doc(n)?.graph)
}

pub fn cycle_doc(n: usize) -> Result<GraphDoc, FamilyError> {
    if n % 2 == 1 {
        return Err(FamilyError::OddCycle(n));
    }
    if n < 4 {
        return Err(FamilyError::TooShort { len: n, min: 4 });
    }
    let seg = segment_doc(n, OddClass::None)?;
    let mut arcs = seg.graph.arcs().to_vec();
    arcs.push((n - 1, 0));
    Ok(GraphDoc {
        graph: GameGraph::new(seg.graph.colors().to_vec(), arcs).expect("cycle is well formed"),
        ids: seg.ids,
        duplicate_arcs: 0,
    })
}

/// Recognizes the subgraph induced by `alive` as a sum of segments.
///
/// Each weak component must be an undirected simple path on at least two
/// vertices with every arc going from an L-vertex to an R-vertex.
pub fn recognize_segments(g: &GameGraph, alive: &VertexSet) -> Option<SegmentConfig> {
    let mut parts = Vec::new();
    for comp in g.components_within(alive) {
        let k = comp.len();
        if k < 2 {
            return None;
        }
        let mut arcs = 0usize;
        let mut endpoint = None;
        for v in &comp {
            let out: Vec<usize> = g.successors(v).iter().copied().filter(|&w| alive.contains(w)).collect();
            let inc = g.predecessors(v).iter().filter(|&&w| alive.contains(w)).count();
            for &w in &out {
                if g.color(v) != Side::Left || g.color(w) != Side::Right {
                    return None;
                }
            }
            let degree = out.len() + inc;
            if degree > 2 {
                return None;
            }
            if degree == 1 {
                endpoint = Some(v);
            }
            arcs += out.len();
        }
        if arcs != k - 1 {
            return None;
        }
        let class = if k % 2 == 0 {
            OddClass::None
        } else if g.color(endpoint?) == Side::Left {
            OddClass::Plus
        } else {
            OddClass::Minus
        };
        parts.push(SegmentDescriptor { len: k, class });
    }
    Some(SegmentConfig::new(parts))
}

/// Size taxonomy of a move in a sum of segments.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MoveClass {
    /// Vertices removed, forced ones included.
    pub k: usize,
    pub kind: MoveKind,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MoveKind {
    Border,
    /// Splits a segment into two segments of at least two vertices.
    Cutting,
}

/// Result of playing offset `i` of a segment: vertices removed and the
/// surviving pieces (length ≥ 2).
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct SegmentMove {
    pub side: Side,
    pub removed: usize,
    pub pieces: SmallVec<[SegmentDescriptor; 2]>,
}

pub(crate) fn play_in_segment(d: &SegmentDescriptor, i: usize) -> SegmentMove {
    debug_assert!(i < d.len);
    let lo = i.saturating_sub(1);
    let hi = (i + 1).min(d.len - 1);
    let mut removed = hi - lo + 1;
    let mut pieces = SmallVec::new();
    // a lone leftover vertex is forced for the mover
    for (start, len) in [(0, lo), (hi + 1, d.len - 1 - hi)] {
        match len {
            0 => {}
            1 => removed += 1,
            _ => pieces.push(d.piece(start, len)),
        }
    }
    SegmentMove {
        side: d.color_at(i),
        removed,
        pieces,
    }
}

/// Classifies playing offset `offset` of the `segment`-th part.
pub fn classify_move(config: &SegmentConfig, segment: usize, offset: usize) -> Option<MoveClass> {
    let d = config.parts.get(segment)?;
    if offset >= d.len {
        return None;
    }
    let m = play_in_segment(d, offset);
    let kind = if m.pieces.len() == 2 {
        MoveKind::Cutting
    } else {
        MoveKind::Border
    };
    Some(MoveClass { k: m.removed, kind })
}
