//! Undirected simple graphs over vertices `1..=n`, with exact vertex
//! connectivity via vertex-split max-flow (Menger).

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt::Write as _;

use crate::error::{AugError, Result};

/// Undirected simple graph. Vertex labels are `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
    adj: Vec<BTreeSet<usize>>,
}

/// A vertex set certifying the connectivity of a graph. For complete graphs
/// there is no separator; `complete` is set and `vertices` is empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparatorWitness {
    pub vertices: BTreeSet<usize>,
    pub complete: bool,
}

impl SeparatorWitness {
    pub fn size(&self) -> usize {
        self.vertices.len()
    }

    fn empty() -> Self {
        SeparatorWitness {
            vertices: BTreeSet::new(),
            complete: false,
        }
    }
}

impl Graph {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "graph needs at least one vertex");
        Graph {
            n,
            edges: BTreeSet::new(),
            adj: vec![BTreeSet::new(); n + 1],
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < 1 || v > self.n {
            return Err(AugError::InvalidVertex(v, self.n));
        }
        Ok(())
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(AugError::InvalidCandidate(u, v, "self-loop"));
        }
        let key = (u.min(v), u.max(v));
        if !self.edges.insert(key) {
            return Err(AugError::InvalidCandidate(u, v, "duplicate edge"));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.adj.get(u).map_or(false, |s| s.contains(&v))
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied()
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.adj[v].len())
    }

    pub fn min_degree(&self) -> usize {
        (1..=self.n).map(|v| self.adj[v].len()).min().unwrap()
    }

    pub fn max_degree(&self) -> usize {
        (1..=self.n).map(|v| self.adj[v].len()).max().unwrap()
    }

    /// Histogram degree -> count of vertices with that degree.
    pub fn degree_histogram(&self) -> BTreeMap<usize, usize> {
        let mut hist = BTreeMap::new();
        for v in 1..=self.n {
            *hist.entry(self.adj[v].len()).or_insert(0) += 1;
        }
        hist
    }

    pub fn is_complete(&self) -> bool {
        self.edges.len() == self.n * (self.n - 1) / 2
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_without(&BTreeSet::new())
    }

    /// Connectivity of the graph induced on `V \ removed`. An empty induced
    /// graph counts as connected.
    pub fn is_connected_without(&self, removed: &BTreeSet<usize>) -> bool {
        let start = match (1..=self.n).find(|v| !removed.contains(v)) {
            Some(v) => v,
            None => return true,
        };
        let remaining = self.n - removed.len();
        let mut seen = vec![false; self.n + 1];
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if !seen[w] && !removed.contains(&w) {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == remaining
    }

    pub fn is_tree(&self) -> bool {
        self.edges.len() == self.n - 1 && self.is_connected()
    }

    pub fn is_path(&self) -> Result<bool> {
        if !self.is_tree() {
            return Err(AugError::NotATree);
        }
        Ok(self.n == 1 || self.max_degree() <= 2)
    }

    pub fn leaves(&self) -> Vec<usize> {
        (1..=self.n).filter(|&v| self.adj[v].len() == 1).collect()
    }

    /// Exact vertex connectivity with a certifying witness.
    ///
    /// Disconnected graphs report kappa = 0 with an empty witness; complete
    /// graphs report n-1 with a flagged empty witness. Otherwise the witness
    /// is a separator of exactly kappa vertices.
    pub fn vertex_connectivity(&self) -> (usize, SeparatorWitness) {
        if self.n == 1 {
            return (
                0,
                SeparatorWitness {
                    vertices: BTreeSet::new(),
                    complete: true,
                },
            );
        }
        if !self.is_connected() {
            return (0, SeparatorWitness::empty());
        }
        if self.is_complete() {
            return (
                self.n - 1,
                SeparatorWitness {
                    vertices: BTreeSet::new(),
                    complete: true,
                },
            );
        }
        // Every separator of size <= delta misses some vertex of
        // {v} + N(v) for a minimum-degree v, so those suffice as sources.
        let v = (1..=self.n)
            .min_by_key(|&v| (self.adj[v].len(), v))
            .unwrap();
        let mut sources: Vec<usize> = vec![v];
        sources.extend(self.adj[v].iter().copied());

        let mut best = usize::MAX;
        let mut best_cut = BTreeSet::new();
        for s in sources {
            for t in 1..=self.n {
                if t == s || self.has_edge(s, t) {
                    continue;
                }
                let (flow, cut) = self.local_connectivity(s, t, best);
                if flow < best {
                    best = flow;
                    best_cut = cut;
                }
            }
        }
        debug_assert!(best < usize::MAX);
        (
            best,
            SeparatorWitness {
                vertices: best_cut,
                complete: false,
            },
        )
    }

    /// Decision form: kappa(G) >= r, with early cutoff per pair.
    pub fn kappa_at_least(&self, r: usize) -> bool {
        if r == 0 {
            return true;
        }
        if !self.is_connected() {
            return false;
        }
        if self.is_complete() {
            return self.n - 1 >= r;
        }
        if self.min_degree() < r {
            return false;
        }
        let v = (1..=self.n)
            .min_by_key(|&v| (self.adj[v].len(), v))
            .unwrap();
        let mut sources: Vec<usize> = vec![v];
        sources.extend(self.adj[v].iter().copied());
        for s in sources {
            for t in 1..=self.n {
                if t == s || self.has_edge(s, t) {
                    continue;
                }
                let (flow, _) = self.local_connectivity(s, t, r);
                if flow < r {
                    return false;
                }
            }
        }
        true
    }

    /// Minimum vertex separator. Errors on complete graphs.
    pub fn min_vertex_separator(&self) -> Result<SeparatorWitness> {
        let (_, witness) = self.vertex_connectivity();
        if witness.complete {
            return Err(AugError::NoSeparator);
        }
        Ok(witness)
    }

    /// Max internally-vertex-disjoint s-t paths for non-adjacent s, t,
    /// stopping once `cutoff` paths are found. Returns the flow value and,
    /// when below the cutoff, the separating vertex cut.
    fn local_connectivity(&self, s: usize, t: usize, cutoff: usize) -> (usize, BTreeSet<usize>) {
        // Vertex split: node 2v = v_in, 2v+1 = v_out.
        let nodes = 2 * (self.n + 1);
        let mut net = FlowNet::new(nodes);
        let inf = self.n + 1;
        for v in 1..=self.n {
            let cap = if v == s || v == t { inf } else { 1 };
            net.add_arc(2 * v, 2 * v + 1, cap);
        }
        for &(u, w) in &self.edges {
            net.add_arc(2 * u + 1, 2 * w, inf);
            net.add_arc(2 * w + 1, 2 * u, inf);
        }
        let flow = net.max_flow(2 * s + 1, 2 * t, cutoff);
        if flow >= cutoff {
            return (flow, BTreeSet::new());
        }
        let reach = net.residual_reachable(2 * s + 1);
        let mut cut = BTreeSet::new();
        for v in 1..=self.n {
            if v != s && v != t && reach[2 * v] && !reach[2 * v + 1] {
                cut.insert(v);
            }
        }
        debug_assert_eq!(cut.len(), flow);
        (flow, cut)
    }

    /// Shared edge-list text format: first line `n m`, then m lines `u v`.
    /// Blank lines and `#` comments (whole-line or trailing) are ignored.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut header: Option<(usize, usize)> = None;
        let mut g: Option<Graph> = None;
        let mut seen = 0usize;
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let nums: Vec<usize> = line
                .split_whitespace()
                .map(|tok| {
                    tok.parse::<usize>().map_err(|_| AugError::Parse {
                        line: idx + 1,
                        msg: format!("expected integer, got {tok:?}"),
                    })
                })
                .collect::<Result<_>>()?;
            match header {
                None => {
                    if nums.len() != 2 {
                        return Err(AugError::Parse {
                            line: idx + 1,
                            msg: "expected header `n m`".into(),
                        });
                    }
                    if nums[0] == 0 {
                        return Err(AugError::Parse {
                            line: idx + 1,
                            msg: "n must be positive".into(),
                        });
                    }
                    header = Some((nums[0], nums[1]));
                    g = Some(Graph::new(nums[0]));
                }
                Some((_, m)) => {
                    if nums.len() != 2 {
                        return Err(AugError::Parse {
                            line: idx + 1,
                            msg: "expected edge `u v`".into(),
                        });
                    }
                    if seen == m {
                        return Err(AugError::Parse {
                            line: idx + 1,
                            msg: format!("more than {m} edges"),
                        });
                    }
                    g.as_mut()
                        .unwrap()
                        .add_edge(nums[0], nums[1])
                        .map_err(|e| AugError::Parse {
                            line: idx + 1,
                            msg: e.to_string(),
                        })?;
                    seen += 1;
                }
            }
        }
        match (header, g) {
            (Some((_, m)), Some(g)) if seen == m => Ok(g),
            (Some((_, m)), Some(_)) => Err(AugError::Parse {
                line: 0,
                msg: format!("expected {m} edges, found {seen}"),
            }),
            _ => Err(AugError::Parse {
                line: 0,
                msg: "empty input".into(),
            }),
        }
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {}", self.n, self.edges.len());
        for (u, v) in &self.edges {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }
}

struct FlowNet {
    // arcs stored as parallel arrays; arc i and i^1 are a residual pair
    head: Vec<Vec<usize>>, // per-node arc indices
    to: Vec<usize>,
    cap: Vec<usize>,
}

impl FlowNet {
    fn new(nodes: usize) -> Self {
        FlowNet {
            head: vec![Vec::new(); nodes],
            to: Vec::new(),
            cap: Vec::new(),
        }
    }

    fn add_arc(&mut self, u: usize, v: usize, cap: usize) {
        let id = self.to.len();
        self.to.push(v);
        self.cap.push(cap);
        self.to.push(u);
        self.cap.push(0);
        self.head[u].push(id);
        self.head[v].push(id + 1);
    }

    /// Edmonds-Karp, stopping once `cutoff` units are routed.
    fn max_flow(&mut self, s: usize, t: usize, cutoff: usize) -> usize {
        let mut flow = 0;
        while flow < cutoff {
            let mut parent: Vec<Option<usize>> = vec![None; self.head.len()];
            let mut queue = VecDeque::from([s]);
            let mut found = false;
            'bfs: while let Some(u) = queue.pop_front() {
                for &a in &self.head[u] {
                    let v = self.to[a];
                    if self.cap[a] > 0 && parent[v].is_none() && v != s {
                        parent[v] = Some(a);
                        if v == t {
                            found = true;
                            break 'bfs;
                        }
                        queue.push_back(v);
                    }
                }
            }
            if !found {
                break;
            }
            // unit capacities on vertex arcs bound each path at 1
            let mut bottleneck = usize::MAX;
            let mut v = t;
            while v != s {
                let a = parent[v].unwrap();
                bottleneck = bottleneck.min(self.cap[a]);
                v = self.to[a ^ 1];
            }
            let mut v = t;
            while v != s {
                let a = parent[v].unwrap();
                self.cap[a] -= bottleneck;
                self.cap[a ^ 1] += bottleneck;
                v = self.to[a ^ 1];
            }
            flow += bottleneck;
        }
        flow
    }

    fn residual_reachable(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.head.len()];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &a in &self.head[u] {
                let v = self.to[a];
                if self.cap[a] > 0 && !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        seen
    }
}
