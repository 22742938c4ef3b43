use std::fmt;

use super::OracleError;

/// A node of the diagram multigraph. Both points `x_i`, `x_i'` of an
/// interaction line collapse into the single vertex node `Vertex(i)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Node {
    /// External annihilation point `x`.
    X,
    /// External creation point `y`.
    Y,
    /// Interaction vertex, 0-based.
    Vertex(u32),
}

impl Node {
    pub(crate) fn index(self) -> usize {
        match self {
            Node::X => 0,
            Node::Y => 1,
            Node::Vertex(v) => 2 + v as usize,
        }
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Node::X => f.write_str("X"),
            Node::Y => f.write_str("Y"),
            Node::Vertex(v) => write!(f, "v{}", v + 1),
        }
    }
}

/// Field-operator slots of an order-`m` operator string.
///
/// Slot `2i + p` is point `p` (0 unprimed, 1 primed) of vertex `i`, on
/// both the creation and the annihilation side. With external legs, slot
/// `2m` is `psi(x)` on the annihilation side and `psi^dagger(y)` on the
/// creation side.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SlotModel {
    m: u32,
    external: bool,
}

impl SlotModel {
    /// `H_1 ... H_m psi(x) psi^dagger(y)`: `2m + 1` slots per side.
    pub fn propagator(m: u32) -> Self {
        SlotModel { m, external: true }
    }

    /// `H_1 ... H_m` alone: `2m` slots per side.
    pub fn vacuum(m: u32) -> Self {
        SlotModel { m, external: false }
    }

    pub fn order(&self) -> u32 {
        self.m
    }

    pub fn has_external_legs(&self) -> bool {
        self.external
    }

    /// Slots per side.
    pub fn slot_count(&self) -> usize {
        2 * self.m as usize + usize::from(self.external)
    }

    /// Nodes: the vertices, plus X and Y when external legs are present.
    pub fn node_count(&self) -> usize {
        self.m as usize + if self.external { 2 } else { 0 }
    }

    pub fn annihilation_node(&self, slot: usize) -> Node {
        self.node(slot, Node::X)
    }

    pub fn creation_node(&self, slot: usize) -> Node {
        self.node(slot, Node::Y)
    }

    fn node(&self, slot: usize, external: Node) -> Node {
        assert!(slot < self.slot_count(), "slot {slot} out of range");
        if slot == 2 * self.m as usize {
            external
        } else {
            Node::Vertex((slot / 2) as u32)
        }
    }

    pub fn annihilation_point(&self, slot: usize) -> String {
        self.point(slot, "x")
    }

    pub fn creation_point(&self, slot: usize) -> String {
        self.point(slot, "y")
    }

    fn point(&self, slot: usize, external: &str) -> String {
        match self.node(slot, Node::X) {
            Node::Vertex(v) if slot.is_multiple_of(2) => format!("x{}", v + 1),
            Node::Vertex(v) => format!("x{}'", v + 1),
            _ => external.to_owned(),
        }
    }
}

/// A full contraction: `pairing[a]` is the creation slot contracted with
/// annihilation slot `a`, in the propagator slot model.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WickMatching {
    m: u32,
    pairing: Vec<u8>,
}

impl WickMatching {
    pub fn new(m: u32, pairing: Vec<u8>) -> Result<Self, OracleError> {
        let n = SlotModel::propagator(m).slot_count();
        if pairing.len() != n {
            return Err(OracleError::InvalidMatching(format!(
                "expected {n} slots, got {}",
                pairing.len()
            )));
        }
        let mut seen = vec![false; n];
        for &c in &pairing {
            let c = c as usize;
            if c >= n || std::mem::replace(&mut seen[c], true) {
                return Err(OracleError::InvalidMatching(format!(
                    "{pairing:?} is not a permutation of 0..{n}"
                )));
            }
        }
        Ok(WickMatching { m, pairing })
    }

    pub(crate) fn from_raw(m: u32, pairing: Vec<u8>) -> Self {
        debug_assert!(WickMatching::new(m, pairing.clone()).is_ok());
        WickMatching { m, pairing }
    }

    pub fn order(&self) -> u32 {
        self.m
    }

    pub fn pairing(&self) -> &[u8] {
        &self.pairing
    }

    pub fn graph(&self) -> DiagramGraph {
        DiagramGraph::from_matching(self)
    }
}

/// Bitmask of the nodes reachable from X, with node indices as in
/// [`Node::index`].
pub(crate) fn reach_from_x(m: u32, pairing: &[u8]) -> u32 {
    let external = 2 * m as usize;
    let node = |slot: usize, ext: usize| if slot == external { ext } else { 2 + slot / 2 };
    let mut adj = [0u32; 16];
    for (a, &c) in pairing.iter().enumerate() {
        let u = node(a, 0);
        let v = node(c as usize, 1);
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    let mut reached = 1u32;
    let mut frontier = 1u32;
    while frontier != 0 {
        let mut next = 0;
        let mut f = frontier;
        while f != 0 {
            let i = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= adj[i];
        }
        frontier = next & !reached;
        reached |= next;
    }
    reached
}

/// The multigraph of a matching: one edge per contraction, directed from
/// the creation point's node to the annihilation point's node. Self-loops
/// are kept.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramGraph {
    m: u32,
    edges: Vec<(Node, Node)>,
}

impl DiagramGraph {
    pub fn from_matching(matching: &WickMatching) -> Self {
        let model = SlotModel::propagator(matching.m);
        let edges = matching
            .pairing
            .iter()
            .enumerate()
            .map(|(a, &c)| (model.creation_node(c as usize), model.annihilation_node(a)))
            .collect();
        DiagramGraph {
            m: matching.m,
            edges,
        }
    }

    pub fn order(&self) -> u32 {
        self.m
    }

    pub fn nodes(&self) -> impl Iterator<Item = Node> {
        [Node::X, Node::Y]
            .into_iter()
            .chain((0..self.m).map(Node::Vertex))
    }

    pub fn edges(&self) -> &[(Node, Node)] {
        &self.edges
    }

    /// Nodes in the component containing `start`, in [`Node`] order.
    pub fn component_of(&self, start: Node) -> Vec<Node> {
        let n = self.m as usize + 2;
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &self.edges {
            adj[u.index()].push(v);
            adj[v.index()].push(u);
        }
        let mut seen = vec![false; n];
        let mut stack = vec![start];
        seen[start.index()] = true;
        let mut out = Vec::new();
        while let Some(u) = stack.pop() {
            out.push(u);
            for &v in &adj[u.index()] {
                if !std::mem::replace(&mut seen[v.index()], true) {
                    stack.push(v);
                }
            }
        }
        out.sort();
        out
    }

    /// All `m + 2` nodes form one component.
    pub fn is_connected(&self) -> bool {
        self.component_of(Node::X).len() == self.m as usize + 2
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn slot_layout() {
        let p = SlotModel::propagator(2);
        assert_eq!(p.slot_count(), 5);
        assert_eq!(p.node_count(), 4);
        assert_eq!(p.annihilation_node(4), Node::X);
        assert_eq!(p.creation_node(4), Node::Y);
        assert_eq!(p.creation_node(3), Node::Vertex(1));
        assert_eq!(p.annihilation_point(3), "x2'");
        assert_eq!(p.creation_point(4), "y");
        let v = SlotModel::vacuum(2);
        assert_eq!(v.slot_count(), 4);
        assert_eq!(v.annihilation_node(3), Node::Vertex(1));
    }

    #[test]
    fn each_vertex_has_two_slots_per_side() {
        for m in 1..=5 {
            let p = SlotModel::propagator(m);
            let mut counts = std::collections::HashMap::new();
            for s in 0..p.slot_count() {
                *counts.entry(("a", p.annihilation_node(s))).or_insert(0) += 1;
                *counts.entry(("c", p.creation_node(s))).or_insert(0) += 1;
            }
            assert_eq!(counts[&("a", Node::X)], 1);
            assert_eq!(counts[&("c", Node::Y)], 1);
            assert!(!counts.contains_key(&("a", Node::Y)));
            for v in 0..m {
                assert_eq!(counts[&("a", Node::Vertex(v))], 2);
                assert_eq!(counts[&("c", Node::Vertex(v))], 2);
            }
        }
    }

    #[test]
    fn rejects_non_permutations() {
        assert!(WickMatching::new(1, vec![0, 1, 2]).is_ok());
        assert!(WickMatching::new(1, vec![0, 1]).is_err());
        assert!(WickMatching::new(1, vec![0, 0, 2]).is_err());
        assert!(WickMatching::new(1, vec![0, 1, 3]).is_err());
    }

    #[test]
    fn order_one_connectivity() {
        // x contracted with y, vertex closed on itself: disconnected.
        let bubble = WickMatching::new(1, vec![0, 1, 2]).unwrap().graph();
        assert!(!bubble.is_connected());
        assert_eq!(bubble.component_of(Node::X), [Node::X, Node::Y]);
        // x <- x1, x1 <- y, x1' <- x1'
        let g = WickMatching::new(1, vec![2, 1, 0]).unwrap().graph();
        assert!(g.is_connected());
        assert_eq!(g.edges().len(), 3);
        assert!(g.edges().contains(&(Node::Vertex(0), Node::Vertex(0))));
    }

    #[test]
    fn bitmask_reach_agrees_with_graph() {
        let m = 2;
        let mut p: Vec<u8> = (0..5).collect();
        loop {
            let g = WickMatching::new(m, p.clone()).unwrap().graph();
            let reach = reach_from_x(m, &p);
            let comp: u32 = g.component_of(Node::X).iter().map(|n| 1 << n.index()).sum();
            assert_eq!(reach, comp);
            if !super::super::enumerate::next_permutation(&mut p) {
                break;
            }
        }
    }
}
