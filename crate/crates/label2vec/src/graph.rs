//! Directed label graph: ingestion of parent-child pairs, cycle pruning
//! into a DAG, and ancestor/descendant queries.

use crate::error::{Error, Result};
use crate::vocab::LabelVocab;

/// Directed graph of parent→child edges over label ids.
///
/// A freshly built graph may contain cycles; [`prune_cycles`] produces an
/// acyclic copy. Adjacency lists are kept sorted in ascending id order so
/// that every traversal in the crate is deterministic.
#[derive(Debug, Clone)]
pub struct LabelGraph {
    children: Vec<Vec<usize>>,
    parents: Vec<Vec<usize>>,
    edge_count: usize,
}

/// Outcome of a single [`LabelGraph::add_edge`] call.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeAdd {
    Added,
    Duplicate,
    SelfLoop,
}

/// Counts of ignored input lines collected while building a graph.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct IngestStats {
    pub duplicates: usize,
    pub self_loops: usize,
}

/// Record of a [`prune_cycles`] run.
///
/// `kept_count + removed_count` equals the edge count of the input graph,
/// and every removed edge lay on at least one directed cycle of the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PruneReport {
    pub removed_edges: Vec<(usize, usize)>,
    pub kept_count: usize,
    pub removed_count: usize,
}

impl LabelGraph {
    /// Creates a graph with `n` nodes and no edges.
    pub fn new(n: usize) -> Self {
        Self {
            children: vec![Vec::new(); n],
            parents: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    pub fn node_count(&self) -> usize {
        self.children.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Child ids of `u`, ascending.
    pub fn children(&self, u: usize) -> &[usize] {
        &self.children[u]
    }

    /// Parent ids of `v`, ascending.
    pub fn parents(&self, v: usize) -> &[usize] {
        &self.parents[v]
    }

    /// All edges as (parent, child), ascending by parent then child.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.children
            .iter()
            .enumerate()
            .flat_map(|(u, kids)| kids.iter().map(move |&v| (u, v)))
    }

    /// Inserts the edge `parent → child`. Self-loops and duplicates are
    /// ignored and reported through the return value.
    pub fn add_edge(&mut self, parent: usize, child: usize) -> EdgeAdd {
        assert!(parent < self.node_count() && child < self.node_count());
        if parent == child {
            return EdgeAdd::SelfLoop;
        }
        match self.children[parent].binary_search(&child) {
            Ok(_) => EdgeAdd::Duplicate,
            Err(pos) => {
                self.children[parent].insert(pos, child);
                let ppos = self.parents[child].binary_search(&parent).unwrap_err();
                self.parents[child].insert(ppos, parent);
                self.edge_count += 1;
                EdgeAdd::Added
            }
        }
    }

    /// True if the graph admits a topological order (Kahn's algorithm).
    pub fn is_acyclic(&self) -> bool {
        let n = self.node_count();
        let mut indegree: Vec<usize> = (0..n).map(|v| self.parents[v].len()).collect();
        let mut queue: Vec<usize> = (0..n).filter(|&v| indegree[v] == 0).collect();
        let mut seen = 0;
        while let Some(u) = queue.pop() {
            seen += 1;
            for &v in &self.children[u] {
                indegree[v] -= 1;
                if indegree[v] == 0 {
                    queue.push(v);
                }
            }
        }
        seen == n
    }

    /// Set of nodes with a directed path to `v`, excluding `v` itself,
    /// in ascending id order.
    pub fn ancestors(&self, v: usize) -> Result<Vec<usize>> {
        self.reachable(v, |g, x| &g.parents[x])
    }

    /// Set of nodes reachable from `u`, excluding `u` itself, ascending.
    pub fn descendants(&self, u: usize) -> Result<Vec<usize>> {
        self.reachable(u, |g, x| &g.children[x])
    }

    fn reachable<'a, F>(&'a self, start: usize, next: F) -> Result<Vec<usize>>
    where
        F: Fn(&'a Self, usize) -> &'a [usize],
    {
        let n = self.node_count();
        if start >= n {
            return Err(Error::IdOutOfRange {
                id: start,
                count: n,
            });
        }
        let mut visited = vec![false; n];
        let mut stack = vec![start];
        visited[start] = true;
        while let Some(x) = stack.pop() {
            for &y in next(self, x) {
                if !visited[y] {
                    visited[y] = true;
                    stack.push(y);
                }
            }
        }
        visited[start] = false;
        Ok((0..n).filter(|&x| visited[x]).collect())
    }
}

/// Builds a graph from (parent name, child name) pairs, interning any new
/// names into `vocab`. The graph is sized to the vocabulary after
/// interning, so labels already present in `vocab` but absent from `edges`
/// become isolated nodes.
pub fn build_graph(
    edges: &[(String, String)],
    vocab: &mut LabelVocab,
) -> Result<(LabelGraph, IngestStats)> {
    if edges.is_empty() {
        return Err(Error::InvalidInput("empty edge list".into()));
    }
    let id_edges: Vec<(usize, usize)> = edges
        .iter()
        .map(|(p, c)| (vocab.intern(p), vocab.intern(c)))
        .collect();
    let mut graph = LabelGraph::new(vocab.len());
    let mut stats = IngestStats::default();
    for (p, c) in id_edges {
        match graph.add_edge(p, c) {
            EdgeAdd::Added => {}
            EdgeAdd::Duplicate => stats.duplicates += 1,
            EdgeAdd::SelfLoop => stats.self_loops += 1,
        }
    }
    Ok((graph, stats))
}

/// Removes every DFS back edge so that the result is acyclic.
///
/// Roots are the parentless nodes of the input in ascending id order;
/// children are explored in ascending id order; an edge is removed iff its
/// target is on the current DFS stack. Nodes left unvisited after all
/// parentless roots (components with no parentless node, i.e. pure cycles)
/// are used as additional starts in ascending id order. The whole
/// procedure is deterministic.
pub fn prune_cycles(graph: &LabelGraph) -> (LabelGraph, PruneReport) {
    let n = graph.node_count();
    let mut visited = vec![false; n];
    let mut on_stack = vec![false; n];
    let mut removed: Vec<(usize, usize)> = Vec::new();

    let parentless = (0..n).filter(|&v| graph.parents(v).is_empty());
    let fallback = 0..n;
    let roots: Vec<usize> = parentless.chain(fallback).collect();

    // Frame: (node, index of the next child to explore).
    let mut stack: Vec<(usize, usize)> = Vec::new();
    for root in roots {
        if visited[root] {
            continue;
        }
        visited[root] = true;
        on_stack[root] = true;
        stack.push((root, 0));
        while let Some(&mut (node, ref mut idx)) = stack.last_mut() {
            let kids = graph.children(node);
            if *idx == kids.len() {
                on_stack[node] = false;
                stack.pop();
                continue;
            }
            let child = kids[*idx];
            *idx += 1;
            if on_stack[child] {
                removed.push((node, child));
            } else if !visited[child] {
                visited[child] = true;
                on_stack[child] = true;
                stack.push((child, 0));
            }
        }
    }

    let mut pruned = LabelGraph::new(n);
    let mut cut = removed.iter().copied().collect::<std::collections::HashSet<_>>();
    for (u, v) in graph.edges() {
        if !cut.remove(&(u, v)) {
            let added = pruned.add_edge(u, v);
            debug_assert_eq!(added, EdgeAdd::Added);
        }
    }
    let report = PruneReport {
        kept_count: pruned.edge_count(),
        removed_count: removed.len(),
        removed_edges: removed,
    };
    (pruned, report)
}
