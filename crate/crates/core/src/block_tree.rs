//! (C,i)-block trees: fundamental cycles from leaf chaining (pi vertices),
//! 2-separators between adjacent cycles (sigma vertices), and degree-i
//! vertices of the working graph (alpha vertices).

use std::collections::{BTreeSet, VecDeque};
use std::fmt::Write as _;

use crate::aug::{AugmentationSet, RoundTag};
use crate::error::{AugError, Result};
use crate::graph::Graph;

/// Sigma vertex: a 2-separator between adjacent fundamental cycles.
/// Constructed for fidelity and DOT rendering; the augmentation rounds read
/// only pi degrees and alpha vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaVertex {
    pub pair: (usize, usize),
    /// Cycle indices (0-based) this separator is adjacent to.
    pub attached: Vec<usize>,
}

/// Alpha attachment count of one pi vertex, in chain order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PiDegree {
    /// 1-based chain index of the pi vertex.
    pub pi: usize,
    pub degree: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockTree {
    round: usize,
    cycles: Vec<BTreeSet<usize>>,
    /// Per graph vertex: index of its attachment cycle (earliest containing
    /// cycle, or nearest by tree distance for off-cycle vertices).
    attach: Vec<usize>,
    sigma: Vec<SigmaVertex>,
    /// (graph vertex, attachment cycle index), sorted by vertex label.
    alpha: Vec<(usize, usize)>,
}

impl BlockTree {
    pub fn round(&self) -> usize {
        self.round
    }

    pub fn cycles(&self) -> &[BTreeSet<usize>] {
        &self.cycles
    }

    pub fn sigma_vertices(&self) -> &[SigmaVertex] {
        &self.sigma
    }

    pub fn alpha_vertices(&self) -> &[(usize, usize)] {
        &self.alpha
    }

    pub fn attachment(&self, v: usize) -> usize {
        self.attach[v]
    }

    /// Alpha vertices attached to cycle index `c`, ascending by label.
    pub fn alpha_of(&self, c: usize) -> Vec<usize> {
        self.alpha
            .iter()
            .filter(|&&(_, a)| a == c)
            .map(|&(v, _)| v)
            .collect()
    }

    /// DOT rendering: pi as boxes, sigma as diamonds, alpha as circles.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph blocktree {\n");
        for (i, cycle) in self.cycles.iter().enumerate() {
            let label: Vec<String> = cycle.iter().map(|v| v.to_string()).collect();
            let _ = writeln!(
                out,
                "  pi{} [shape=box, label=\"pi{} {{{}}}\"];",
                i + 1,
                i + 1,
                label.join(",")
            );
        }
        for (k, s) in self.sigma.iter().enumerate() {
            let _ = writeln!(
                out,
                "  sigma{} [shape=diamond, label=\"{{{},{}}}\"];",
                k, s.pair.0, s.pair.1
            );
            for &c in &s.attached {
                let _ = writeln!(out, "  sigma{} -- pi{};", k, c + 1);
            }
        }
        for &(v, c) in &self.alpha {
            let _ = writeln!(out, "  alpha{v} [shape=circle, label=\"{v}\"];");
            let _ = writeln!(out, "  alpha{} -- pi{};", v, c + 1);
        }
        out.push_str("}\n");
        out
    }
}

/// Leaves of `t` ordered by first visit in a DFS rooted at the lowest-label
/// maximum-degree vertex, children in ascending label order.
pub fn canonical_leaf_order(t: &Graph) -> Result<Vec<usize>> {
    if !t.is_tree() {
        return Err(AugError::NotATree);
    }
    if t.is_path()? {
        return Err(AugError::PathInput);
    }
    let max_deg = t.max_degree();
    let root = (1..=t.n())
        .find(|&v| t.degree(v).unwrap() == max_deg)
        .unwrap();
    let mut leaves = Vec::new();
    let mut stack = vec![(root, 0usize)];
    while let Some((v, parent)) = stack.pop() {
        if t.degree(v).unwrap() == 1 {
            leaves.push(v);
            continue;
        }
        // neighbors ascending; stack is LIFO so push descending
        let mut kids: Vec<usize> = t.neighbors(v).filter(|&w| w != parent).collect();
        kids.sort_unstable_by(|a, b| b.cmp(a));
        for w in kids {
            stack.push((w, v));
        }
    }
    Ok(leaves)
}

/// The p-1 chaining edges {l_i, l_{i+1}} over the canonical leaf order.
pub fn leaf_chain_edges(t: &Graph) -> Result<AugmentationSet> {
    let leaves = canonical_leaf_order(t)?;
    let mut chain = AugmentationSet::new();
    for pair in leaves.windows(2) {
        chain.push(pair[0], pair[1], RoundTag::LeafChain)?;
    }
    Ok(chain)
}

fn tree_path(tree: &Graph, from: usize, to: usize) -> Vec<usize> {
    let mut prev = vec![0usize; tree.n() + 1];
    let mut seen = vec![false; tree.n() + 1];
    seen[from] = true;
    let mut queue = VecDeque::from([from]);
    while let Some(u) = queue.pop_front() {
        if u == to {
            break;
        }
        for w in tree.neighbors(u) {
            if !seen[w] {
                seen[w] = true;
                prev[w] = u;
                queue.push_back(w);
            }
        }
    }
    let mut path = vec![to];
    let mut cur = to;
    while cur != from {
        cur = prev[cur];
        path.push(cur);
    }
    path.reverse();
    path
}

/// Build the (C,2)-block tree of `h` = tree + chain.
pub fn build_c2_block_tree(h: &Graph, chain: &AugmentationSet) -> Result<BlockTree> {
    let n = h.n();
    let chain_set: BTreeSet<(usize, usize)> = chain.edges().iter().copied().collect();
    if chain_set.len() != chain.len() {
        return Err(AugError::Inconsistent("duplicate chain edges".into()));
    }
    for &(u, v) in chain.edges() {
        if !h.has_edge(u, v) {
            return Err(AugError::Inconsistent(format!(
                "chain edge {{{u},{v}}} missing from host graph"
            )));
        }
    }
    let tree = Graph::from_edges(
        n,
        h.edges().filter(|e| !chain_set.contains(e)),
    )?;
    if !tree.is_tree() {
        return Err(AugError::Inconsistent(
            "host minus chain is not a tree".into(),
        ));
    }

    let cycles: Vec<BTreeSet<usize>> = chain
        .edges()
        .iter()
        .map(|&(u, v)| tree_path(&tree, u, v).into_iter().collect())
        .collect();

    let mut attach = vec![usize::MAX; n + 1];
    for v in 1..=n {
        if let Some(c) = cycles.iter().position(|cyc| cyc.contains(&v)) {
            attach[v] = c;
        }
    }
    // Guard: vertices off every fundamental cycle attach to the nearest
    // cycle by tree distance, tie-break lowest cycle index.
    for v in 1..=n {
        if attach[v] != usize::MAX {
            continue;
        }
        let dist = bfs_distances(&tree, v);
        attach[v] = (0..cycles.len())
            .min_by_key(|&c| {
                cycles[c]
                    .iter()
                    .map(|&w| dist[w])
                    .min()
                    .unwrap_or(usize::MAX)
            })
            .ok_or_else(|| AugError::Inconsistent("no fundamental cycles".into()))?;
    }

    let sigma = find_sigma_vertices(h, &cycles);
    let alpha = collect_alpha(h, &attach, 2);

    Ok(BlockTree {
        round: 2,
        cycles,
        attach,
        sigma,
        alpha,
    })
}

fn bfs_distances(g: &Graph, from: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.n() + 1];
    dist[from] = 0;
    let mut queue = VecDeque::from([from]);
    while let Some(u) = queue.pop_front() {
        for w in g.neighbors(u) {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

fn collect_alpha(h: &Graph, attach: &[usize], degree: usize) -> Vec<(usize, usize)> {
    (1..=h.n())
        .filter(|&v| h.degree(v).unwrap() == degree)
        .map(|v| (v, attach[v]))
        .collect()
}

/// Sigma vertices: size-2 separators of `h` that separate adjacent
/// fundamental cycles, either fully contained in both or split across them.
fn find_sigma_vertices(h: &Graph, cycles: &[BTreeSet<usize>]) -> Vec<SigmaVertex> {
    let n = h.n();
    let mut out = Vec::new();
    for x in 1..=n {
        for y in (x + 1)..=n {
            let removed = BTreeSet::from([x, y]);
            if n - 2 < 2 || h.is_connected_without(&removed) {
                continue;
            }
            let mut attached = BTreeSet::new();
            for i in 0..cycles.len().saturating_sub(1) {
                let (a, b) = (&cycles[i], &cycles[i + 1]);
                let both = a.contains(&x) && a.contains(&y) && b.contains(&x) && b.contains(&y);
                let split = (a.contains(&x) && b.contains(&y))
                    || (a.contains(&y) && b.contains(&x));
                if both || split {
                    attached.insert(i);
                    attached.insert(i + 1);
                }
            }
            if !attached.is_empty() {
                out.push(SigmaVertex {
                    pair: (x, y),
                    attached: attached.into_iter().collect(),
                });
            }
        }
    }
    out
}

/// (C,i+1)-block tree: same pi/sigma skeleton, alpha vertices are the
/// degree-(i+1) vertices of the current working graph.
pub fn advance_block_tree(bt: &BlockTree, h: &Graph) -> BlockTree {
    let round = bt.round + 1;
    BlockTree {
        round,
        cycles: bt.cycles.clone(),
        attach: bt.attach.clone(),
        sigma: bt.sigma.clone(),
        alpha: collect_alpha(h, &bt.attach, round),
    }
}

/// Refresh alpha vertices from current degrees, keeping the round fixed.
/// Within-round equivalent of removing matched alpha vertices.
pub fn refresh_alpha(bt: &BlockTree, h: &Graph) -> BlockTree {
    BlockTree {
        alpha: collect_alpha(h, &bt.attach, bt.round),
        ..bt.clone()
    }
}

/// Alpha attachment counts in pi chain order.
pub fn pi_degrees(bt: &BlockTree) -> Vec<PiDegree> {
    let mut counts = vec![0usize; bt.cycles.len()];
    for &(_, c) in &bt.alpha {
        counts[c] += 1;
    }
    counts
        .into_iter()
        .enumerate()
        .map(|(i, degree)| PiDegree { pi: i + 1, degree })
        .collect()
}
