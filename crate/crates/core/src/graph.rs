use crate::vertex_set::VertexSet;

/// A simple undirected graph whose vertices are a subset of `0..64`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UndirectedGraph {
    vertices: VertexSet,
    adj: Vec<u64>,
}

impl UndirectedGraph {
    pub fn new(vertices: VertexSet) -> Self {
        let size = vertices.max().map_or(0, |m| m + 1);
        UndirectedGraph { vertices, adj: vec![0; size] }
    }

    pub fn add_edge(&mut self, x: usize, y: usize) {
        assert!(x != y, "self-loop {x}");
        assert!(
            self.vertices.contains(x) && self.vertices.contains(y),
            "edge {{{x},{y}}} outside vertex set {}",
            self.vertices
        );
        self.adj[x] |= 1 << y;
        self.adj[y] |= 1 << x;
    }

    pub fn vertices(&self) -> VertexSet {
        self.vertices
    }

    pub fn has_edge(&self, x: usize, y: usize) -> bool {
        x < self.adj.len() && self.adj[x] >> y & 1 == 1
    }

    pub fn neighbors(&self, x: usize) -> VertexSet {
        VertexSet(self.adj.get(x).copied().unwrap_or(0))
    }

    pub fn degree(&self, x: usize) -> usize {
        self.neighbors(x).len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(x, y)` with `x < y`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut e = Vec::new();
        for x in self.vertices {
            for y in self.neighbors(x) {
                if x < y {
                    e.push((x, y));
                }
            }
        }
        e
    }

    /// `G[X]`.
    pub fn induced(&self, set: VertexSet) -> UndirectedGraph {
        let set = set.intersection(self.vertices);
        let mut g = UndirectedGraph::new(set);
        for x in set {
            g.adj[x] = self.adj[x] & set.bits();
        }
        g
    }

    /// Connected components, ordered by least member.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let mut left = self.vertices;
        let mut comps = Vec::new();
        while let Some(start) = left.min() {
            let mut comp = VertexSet::singleton(start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let mut next = 0u64;
                for v in frontier {
                    next |= self.adj[v];
                }
                frontier = VertexSet(next).difference(comp);
                comp = comp.union(frontier);
            }
            left = left.difference(comp);
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Sorted degree sequence.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.vertices.iter().map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn components_in_order_of_least_member() {
        let mut g = UndirectedGraph::new(VertexSet::from([1, 2, 4, 5, 7]));
        g.add_edge(5, 2);
        g.add_edge(7, 4);
        let comps = g.connected_components();
        assert_eq!(
            comps,
            vec![VertexSet::from([1]), VertexSet::from([2, 5]), VertexSet::from([4, 7])]
        );
        assert!(!g.is_connected());
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.edges(), vec![(2, 5), (4, 7)]);
    }

    #[test]
    fn empty_graph() {
        let g = UndirectedGraph::new(VertexSet::EMPTY);
        assert!(g.connected_components().is_empty());
        assert!(g.is_connected());
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn induced_subgraph() {
        let mut g = UndirectedGraph::new(VertexSet::range(4));
        g.add_edge(0, 1);
        g.add_edge(1, 2);
        g.add_edge(2, 3);
        let h = g.induced(VertexSet::from([1, 2, 3]));
        assert_eq!(h.edges(), vec![(1, 2), (2, 3)]);
        assert_eq!(h.degree_sequence(), vec![1, 1, 2]);
    }
}
