//! Non-path augmentation: chain the leaves, then for each round j = 2..r-1
//! pair up the degree-j vertices guided by the (C,j)-block tree, dispatching
//! to six boundary-case handlers when the block tree matches their patterns.

use std::collections::{HashSet, VecDeque};
use std::fmt::Write as _;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::aug::{AugmentationSet, RoundTag};
use crate::bound::augmentation_lower_bound;
use crate::block_tree::{
    advance_block_tree, build_c2_block_tree, leaf_chain_edges, pi_degrees, refresh_alpha,
    BlockTree,
};
use crate::error::{AugError, Result};
use crate::graph::Graph;

/// Pattern match of the block tree against the boundary-case taxonomy.
/// Bindings name the alpha vertices (graph labels) the pattern matched.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BoundaryCase {
    None,
    /// Exactly one alpha vertex left.
    Bc1 { a: usize },
    /// Four degree-1 pi vertices a,b,c,d with {b,c} already an edge.
    Bc2 { a: usize, b: usize, c: usize, d: usize },
    /// Three pi vertices with degree sequence (1,2,1).
    Bc3 { a: usize, b: usize, c: usize, d: usize },
    /// Every considered pi vertex has degree exactly one.
    Bc4 { alphas: Vec<usize> },
    /// All cross-cycle alpha pairs are already adjacent.
    Bc5,
    /// Exactly one pi vertex of degree > 1, the rest degree one.
    Bc6 { l: usize },
}

impl BoundaryCase {
    fn tag(&self) -> RoundTag {
        let case = match self {
            BoundaryCase::None => 0,
            BoundaryCase::Bc1 { .. } => 1,
            BoundaryCase::Bc2 { .. } => 2,
            BoundaryCase::Bc3 { .. } => 3,
            BoundaryCase::Bc4 { .. } => 4,
            BoundaryCase::Bc5 => 5,
            BoundaryCase::Bc6 { .. } => 6,
        };
        RoundTag::Boundary { case }
    }
}

/// Working state of one block-tree round; carried in pattern-exhausted
/// diagnostics.
#[derive(Debug, Clone)]
pub struct RoundState {
    pub j: usize,
    pub h: Graph,
    pub bt: BlockTree,
    pub eca: AugmentationSet,
}

impl RoundState {
    fn dump(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "round j={}", self.j);
        let degs: Vec<usize> = pi_degrees(&self.bt).iter().map(|p| p.degree).collect();
        let _ = writeln!(out, "pi degrees: {degs:?}");
        let _ = writeln!(out, "alpha: {:?}", self.bt.alpha_vertices());
        let _ = writeln!(out, "eca so far: {:?}", self.eca.edges());
        let _ = write!(out, "working graph:\n{}", self.h.to_edge_list());
        out
    }
}

/// Cycle indices with at least one alpha vertex, ascending. Degree-0 pi
/// vertices are excluded from all boundary-case decisions.
fn considered(bt: &BlockTree) -> Vec<usize> {
    pi_degrees(bt)
        .iter()
        .filter(|p| p.degree >= 1)
        .map(|p| p.pi - 1)
        .collect()
}

/// Match the block tree against the boundary cases, most specific first:
/// BC1, BC2, BC3, BC5, BC6, then BC4.
pub fn classify_boundary_case(bt: &BlockTree, h: &Graph) -> BoundaryCase {
    let cons = considered(bt);
    let alphas = bt.alpha_vertices();
    let total = alphas.len();
    if total == 0 {
        return BoundaryCase::None;
    }
    if total == 1 {
        return BoundaryCase::Bc1 { a: alphas[0].0 };
    }
    let degs: Vec<usize> = cons.iter().map(|&c| bt.alpha_of(c).len()).collect();

    if cons.len() == 4 && degs.iter().all(|&d| d == 1) {
        let (a, b, c, d) = (
            bt.alpha_of(cons[0])[0],
            bt.alpha_of(cons[1])[0],
            bt.alpha_of(cons[2])[0],
            bt.alpha_of(cons[3])[0],
        );
        if h.has_edge(b, c) {
            return BoundaryCase::Bc2 { a, b, c, d };
        }
    }
    if cons.len() == 3 && degs == [1, 2, 1] {
        let mid = bt.alpha_of(cons[1]);
        return BoundaryCase::Bc3 {
            a: bt.alpha_of(cons[0])[0],
            b: mid[0],
            c: mid[1],
            d: bt.alpha_of(cons[2])[0],
        };
    }
    // BC5: vacuously true with a single considered pi vertex
    let cross_all_adjacent = cons.iter().enumerate().all(|(k, &ci)| {
        cons[k + 1..].iter().all(|&cj| {
            bt.alpha_of(ci)
                .iter()
                .all(|&x| bt.alpha_of(cj).iter().all(|&y| h.has_edge(x, y)))
        })
    });
    if cross_all_adjacent {
        return BoundaryCase::Bc5;
    }
    let big: Vec<usize> = cons.iter().copied().filter(|&c| bt.alpha_of(c).len() > 1).collect();
    if big.len() == 1 && cons.len() >= 2 {
        return BoundaryCase::Bc6 { l: big[0] };
    }
    if degs.iter().all(|&d| d == 1) {
        return BoundaryCase::Bc4 {
            alphas: cons.iter().map(|&c| bt.alpha_of(c)[0]).collect(),
        };
    }
    BoundaryCase::None
}

/// True if the vertices in `alphas` can be paired into floor(k/2)
/// non-adjacent pairs (a near-perfect matching in the complement).
fn can_match_all(alphas: &[usize], h: &Graph) -> bool {
    let k = alphas.len();
    if k <= 1 {
        return true;
    }
    if k > 25 {
        return true; // out of lookahead range; proceed optimistically
    }
    fn rec(mask: u32, alphas: &[usize], h: &Graph, dead: &mut HashSet<u32>) -> bool {
        if mask.count_ones() <= 1 {
            return true;
        }
        if dead.contains(&mask) {
            return false;
        }
        let i = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << i);
        let mut bits = rest;
        while bits != 0 {
            let j = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            if !h.has_edge(alphas[i], alphas[j]) && rec(rest & !(1 << j), alphas, h, dead) {
                return true;
            }
        }
        // odd counts may leave exactly one vertex unmatched
        if mask.count_ones() % 2 == 1 && rec(rest, alphas, h, dead) {
            return true;
        }
        dead.insert(mask);
        false
    }
    let mut dead = HashSet::new();
    rec((1u32 << k) - 1, alphas, h, &mut dead)
}

/// Candidate ordering for one augmentation attempt. The first attempt
/// prefers pairs far apart in the input tree (the path construction pairs
/// near-antipodal vertices for the same reason); retry attempts shuffle
/// with a fixed seed instead.
struct PairCtx<'d> {
    dist: &'d [Vec<usize>],
    rng: Option<ChaCha8Rng>,
}

impl PairCtx<'_> {
    fn order_pairs(&mut self, candidates: &mut [(usize, usize)]) {
        match &mut self.rng {
            Some(rng) => candidates.shuffle(rng),
            None => candidates
                .sort_by_key(|&(x, y)| (std::cmp::Reverse(self.dist[x][y]), x, y)),
        }
    }

    fn order_vertices(&mut self, vertices: &mut [usize]) {
        if let Some(rng) = &mut self.rng {
            vertices.shuffle(rng);
        }
    }
}

/// All-pairs distances in the tree, BFS from every vertex. Index 0 unused.
fn tree_distances(t: &Graph) -> Vec<Vec<usize>> {
    let n = t.n();
    let mut dist = vec![vec![usize::MAX; n + 1]; n + 1];
    for s in 1..=n {
        dist[s][s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for v in t.neighbors(u) {
                if dist[s][v] == usize::MAX {
                    dist[s][v] = dist[s][u] + 1;
                    queue.push_back(v);
                }
            }
        }
    }
    dist
}

fn remaining_without(bt: &BlockTree, x: usize, y: usize) -> Vec<usize> {
    bt.alpha_vertices()
        .iter()
        .map(|&(v, _)| v)
        .filter(|&v| v != x && v != y)
        .collect()
}

/// Pick the first candidate pair (in context order) that is a non-edge and
/// keeps the rest of the round matchable. Strictly feasibility-preserving:
/// a pair that strands the remaining alphas here may cut off a better pair
/// in a sibling branch, so the infeasible fallback lives in the driver.
fn pick_pair(
    bt: &BlockTree,
    h: &Graph,
    candidates: &[(usize, usize)],
    ctx: &mut PairCtx<'_>,
) -> Option<(usize, usize)> {
    let mut non_edges: Vec<(usize, usize)> = candidates
        .iter()
        .copied()
        .filter(|&(x, y)| x != y && !h.has_edge(x, y))
        .collect();
    ctx.order_pairs(&mut non_edges);
    non_edges
        .iter()
        .copied()
        .find(|&(x, y)| can_match_all(&remaining_without(bt, x, y), h))
}

/// BC1: the lone alpha vertex `a` links to a vertex of another cycle whose
/// working-graph degree is deg(a)+1; if none qualifies, to a minimum-degree
/// vertex of another cycle.
fn bc1_edge(
    bt: &BlockTree,
    h: &Graph,
    a: usize,
    ctx: &mut PairCtx<'_>,
) -> Option<(usize, usize)> {
    let home = bt.attachment(a);
    let in_other_cycle = |c: usize| {
        bt.cycles()
            .iter()
            .enumerate()
            .any(|(i, cyc)| i != home && cyc.contains(&c))
    };
    let mut cands: Vec<usize> = (1..=h.n())
        .filter(|&c| c != a && !h.has_edge(a, c) && in_other_cycle(c))
        .collect();
    ctx.order_vertices(&mut cands);
    let target = h.degree(a).unwrap() + 1;
    if let Some(&c) = cands.iter().find(|&&c| h.degree(c).unwrap() == target) {
        return Some((a, c));
    }
    cands
        .iter()
        .copied()
        .min_by_key(|&c| (h.degree(c).unwrap(), c))
        .map(|c| (a, c))
}

/// Pair four alpha vertices into two new edges, preferring the pairing with
/// the largest total tree distance.
fn pair_four(
    h: &Graph,
    pairings: &[((usize, usize), (usize, usize))],
    ctx: &mut PairCtx<'_>,
) -> Vec<(usize, usize)> {
    let mut pairings = pairings.to_vec();
    match &mut ctx.rng {
        Some(rng) => pairings.shuffle(rng),
        None => pairings.sort_by_key(|&(p, q)| {
            std::cmp::Reverse(ctx.dist[p.0][p.1] + ctx.dist[q.0][q.1])
        }),
    }
    let pairings = &pairings[..];
    for &(p, q) in pairings {
        if !h.has_edge(p.0, p.1) && !h.has_edge(q.0, q.1) {
            return vec![p, q];
        }
    }
    // no full pairing; salvage a single non-adjacent pair
    for &(p, q) in pairings {
        for e in [p, q] {
            if !h.has_edge(e.0, e.1) {
                return vec![e];
            }
        }
    }
    Vec::new()
}

/// Compute the edges one handler invocation adds. An empty result means the
/// case pattern is exhausted.
fn boundary_augment(
    bt: &BlockTree,
    case: &BoundaryCase,
    h: &Graph,
    ctx: &mut PairCtx<'_>,
) -> Vec<(usize, usize)> {
    match case {
        BoundaryCase::None => Vec::new(),
        BoundaryCase::Bc1 { a } => bc1_edge(bt, h, *a, ctx).into_iter().collect(),
        BoundaryCase::Bc2 { a, b, c, d } => pair_four(
            h,
            &[
                ((*a, *c), (*b, *d)),
                ((*a, *b), (*c, *d)),
                ((*a, *d), (*b, *c)),
            ],
            ctx,
        ),
        BoundaryCase::Bc3 { a, b, c, d } => pair_four(
            h,
            &[
                ((*a, *c), (*b, *d)),
                ((*a, *b), (*c, *d)),
                ((*a, *d), (*b, *c)),
            ],
            ctx,
        ),
        BoundaryCase::Bc4 { alphas } => {
            // repeatedly pair the first unmatched with the farthest
            // unmatched (maximal chain-index gap), keeping the residue
            // matchable
            let mut unmatched: Vec<usize> = alphas.clone();
            let mut edges = Vec::new();
            while unmatched.len() >= 2 {
                let x = unmatched[0];
                let mut partners: Vec<usize> = unmatched[1..].to_vec();
                partners.reverse(); // farthest chain index first
                ctx.order_vertices(&mut partners);
                let candidates: Vec<(usize, usize)> =
                    partners.iter().map(|&y| (x, y)).collect();
                let rest_pool: Vec<usize> = unmatched.clone();
                let feasible = |y: usize, pool: &[usize]| {
                    let rest: Vec<usize> = pool
                        .iter()
                        .copied()
                        .filter(|&v| v != x && v != y)
                        .collect();
                    can_match_all(&rest, h)
                };
                let picked = candidates
                    .iter()
                    .copied()
                    .filter(|&(_, y)| !h.has_edge(x, y))
                    .find(|&(_, y)| feasible(y, &rest_pool));
                if let Some((x, y)) = picked {
                    edges.push((x, y));
                    unmatched.retain(|&v| v != x && v != y);
                } else {
                    // no feasibility-preserving partner for x; leave it for
                    // the fall-through cases
                    unmatched.remove(0);
                }
            }
            edges
        }
        BoundaryCase::Bc5 => {
            // two non-adjacent alpha vertices of the same pi vertex
            for c in considered(bt) {
                let members = bt.alpha_of(c);
                let mut candidates = Vec::new();
                for (i, &x) in members.iter().enumerate() {
                    for &y in &members[i + 1..] {
                        candidates.push((x, y));
                    }
                }
                if let Some(pair) = pick_pair(bt, h, &candidates, ctx) {
                    return vec![pair];
                }
            }
            // no within-cycle pair anywhere: every alpha pair in the graph
            // is adjacent, so fall through to the BC1 action on the lowest
            if let Some(&(a, _)) = bt.alpha_vertices().first() {
                return bc1_edge(bt, h, a, ctx).into_iter().collect();
            }
            Vec::new()
        }
        BoundaryCase::Bc6 { l } => {
            let cons = considered(bt);
            let mut partners: Vec<usize> = cons.iter().copied().filter(|&c| c != *l).collect();
            partners.sort_by_key(|&c| (std::cmp::Reverse(c.abs_diff(*l)), c));
            ctx.order_vertices(&mut partners);
            let own = bt.alpha_of(*l);
            for p in partners {
                let mut candidates = Vec::new();
                for &x in &own {
                    for &y in &bt.alpha_of(p) {
                        candidates.push((x, y));
                    }
                }
                if let Some(pair) = pick_pair(bt, h, &candidates, ctx) {
                    return vec![pair];
                }
            }
            Vec::new()
        }
    }
}

/// Last-resort pairing over the whole alpha pool, ignoring cycle structure.
/// Near r = n-1 the working graph is dense enough that the only legal pairs
/// may sit inside one cycle while the matched case only tries cross pairs.
fn any_feasible_pair(
    bt: &BlockTree,
    h: &Graph,
    ctx: &mut PairCtx<'_>,
) -> Option<(usize, usize)> {
    let alphas: Vec<usize> = bt.alpha_vertices().iter().map(|&(v, _)| v).collect();
    let mut candidates = Vec::new();
    for (i, &x) in alphas.iter().enumerate() {
        for &y in &alphas[i + 1..] {
            candidates.push((x, y));
        }
    }
    pick_pair(bt, h, &candidates, ctx)
}

/// A maximum set of disjoint pairs among `vs` that are non-adjacent in `t`:
/// floor(|vs|/2) pairs, or None if no such pairing exists.
fn complement_matching(vs: &[usize], t: &Graph) -> Option<Vec<(usize, usize)>> {
    let k = vs.len();
    if k > 25 {
        return None;
    }
    fn rec(
        mask: u32,
        vs: &[usize],
        t: &Graph,
        dead: &mut HashSet<u32>,
        out: &mut Vec<(usize, usize)>,
    ) -> bool {
        if mask.count_ones() <= 1 {
            return true;
        }
        if dead.contains(&mask) {
            return false;
        }
        let i = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << i);
        let mut bits = rest;
        while bits != 0 {
            let j = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            if !t.has_edge(vs[i], vs[j]) {
                out.push((vs[i], vs[j]));
                if rec(rest & !(1 << j), vs, t, dead, out) {
                    return true;
                }
                out.pop();
            }
        }
        if mask.count_ones() % 2 == 1 && rec(rest, vs, t, dead, out) {
            return true;
        }
        dead.insert(mask);
        false
    }
    let mut out = Vec::new();
    let mut dead = HashSet::new();
    rec((1u32 << k) - 1, vs, t, &mut dead, &mut out).then_some(out)
}

/// Dense-regime construction for r >= n-2: add every non-edge except a
/// maximum matching among vertices that can afford to stay one edge short
/// of full degree. The skipped matching has floor((n-u)/2) pairs (u = number
/// of degree-(n-1) vertices), which lands the count exactly on the
/// deficiency bound, and K_n minus a matching is (n-2)-connected.
fn dense_augmentation(t: &Graph, r: usize) -> Option<(Graph, AugmentationSet)> {
    let n = t.n();
    if r + 2 < n {
        return None;
    }
    let skip: Vec<(usize, usize)> = if r == n - 1 {
        Vec::new()
    } else {
        let eligible: Vec<usize> = (1..=n)
            .filter(|&v| t.degree(v).unwrap() <= n - 2)
            .collect();
        complement_matching(&eligible, t)?
    };
    let skipped = |u: usize, v: usize| skip.iter().any(|&(a, b)| (a, b) == (u, v) || (b, a) == (u, v));
    let mut h = t.clone();
    let mut eca = AugmentationSet::new();
    for u in 1..=n {
        for v in (u + 1)..=n {
            if !t.has_edge(u, v) && !skipped(u, v) {
                h.add_edge(u, v).ok()?;
                eca.push(u, v, RoundTag::Complement).ok()?;
            }
        }
    }
    Some((h, eca))
}

/// Desperate fallback: any non-edge over the alpha pool, feasibility be
/// damned. Only reached when no feasibility-preserving pair exists at all.
fn any_nonedge_pair(bt: &BlockTree, h: &Graph) -> Option<(usize, usize)> {
    let alphas: Vec<usize> = bt.alpha_vertices().iter().map(|&(v, _)| v).collect();
    for (i, &x) in alphas.iter().enumerate() {
        for &y in &alphas[i + 1..] {
            if !h.has_edge(x, y) {
                return Some((x, y));
            }
        }
    }
    None
}

/// One main-loop pairing: an alpha vertex of the highest-degree pi vertex
/// with one of the second highest; widens to lower-ranked pi pairs when all
/// of those cross pairs already exist.
fn main_loop_pair(bt: &BlockTree, h: &Graph, ctx: &mut PairCtx<'_>) -> Option<(usize, usize)> {
    let mut ranked = considered(bt);
    ranked.sort_by_key(|&c| (std::cmp::Reverse(bt.alpha_of(c).len()), c));
    ctx.order_vertices(&mut ranked);
    for (i, &p) in ranked.iter().enumerate() {
        for &q in &ranked[i + 1..] {
            let mut candidates = Vec::new();
            for &x in &bt.alpha_of(p) {
                for &y in &bt.alpha_of(q) {
                    candidates.push((x, y));
                }
            }
            if let Some(pair) = pick_pair(bt, h, &candidates, ctx) {
                return Some(pair);
            }
        }
    }
    None
}

/// Progress notifications during a non-path run, for tracing and rendering.
#[derive(Debug)]
pub enum TraceEvent<'a> {
    LeafChain(&'a AugmentationSet),
    RoundStart { j: usize, bt: &'a BlockTree },
    EdgeAdded { j: usize, edge: (usize, usize), tag: RoundTag },
}

/// Algorithm: chain the leaves, then run block-tree rounds j = 2..r-1.
pub fn nonpath_augmentation(t: &Graph, r: usize) -> Result<(Graph, AugmentationSet)> {
    nonpath_augmentation_with(t, r, |_| {})
}

/// Same, reporting a trace event per round snapshot and per added edge.
///
/// Pair selection inside a round is heuristic within the count-preserving
/// space, so the finished graph is checked for r-connectivity; on a
/// shortfall the rounds re-run with seeded-shuffle tie-breaking. All
/// attempts add the same number of edges, so exactness never degrades, and
/// the fixed seed schedule keeps the output deterministic.
pub fn nonpath_augmentation_with<F: FnMut(TraceEvent<'_>)>(
    t: &Graph,
    r: usize,
    mut trace: F,
) -> Result<(Graph, AugmentationSet)> {
    if !t.is_tree() {
        return Err(AugError::NotATree);
    }
    if t.is_path()? {
        return Err(AugError::PathInput);
    }
    let n = t.n();
    if r < 2 || r >= n {
        return Err(AugError::InvalidTarget { r, n });
    }
    if r == 2 {
        return Err(AugError::UnsupportedTarget);
    }

    let bound = augmentation_lower_bound(t, r)?.bound;
    let good = |h: &Graph, eca: &AugmentationSet| eca.len() == bound && h.kappa_at_least(r);

    let chain = leaf_chain_edges(t)?;
    let dist = tree_distances(t);
    const MAX_ATTEMPTS: u64 = 64;
    let make_ctx = |attempt: u64| PairCtx {
        dist: &dist,
        rng: (attempt > 0).then(|| ChaCha8Rng::seed_from_u64(attempt)),
    };
    let mut last_err = None;
    for attempt in 0..MAX_ATTEMPTS {
        match run_rounds(t, r, &chain, &mut make_ctx(attempt), &mut |_| {}) {
            Ok((h, eca)) if good(&h, &eca) => {
                // deterministic: replay the same attempt with tracing on
                return run_rounds(t, r, &chain, &mut make_ctx(attempt), &mut trace);
            }
            Ok((h, eca)) => {
                let (kappa, w) = h.vertex_connectivity();
                last_err = Some(AugError::PatternExhausted {
                    state: format!(
                        "shortfall: kappa={kappa}, r={r}, separator {:?}, \
                         eca size {} vs bound {bound}, eca {:?}",
                        w.vertices,
                        eca.len(),
                        eca.edges()
                    ),
                });
            }
            Err(e) => last_err = Some(e),
        }
        if attempt == 0 {
            // near-complete targets admit a closed-form optimum; try it
            // before burning shuffled retries
            if let Some((h, eca)) = dense_augmentation(t, r) {
                if good(&h, &eca) {
                    return Ok((h, eca));
                }
            }
        }
    }
    Err(last_err.expect("at least one attempt runs"))
}

/// Leaf chain plus block-tree rounds j = 2..r-1 under one tie-breaking
/// context.
fn run_rounds<F: FnMut(TraceEvent<'_>)>(
    t: &Graph,
    r: usize,
    chain: &AugmentationSet,
    ctx: &mut PairCtx<'_>,
    trace: &mut F,
) -> Result<(Graph, AugmentationSet)> {
    let mut h = chain.apply_to(t)?;
    let mut eca = chain.clone();
    trace(TraceEvent::LeafChain(chain));

    let mut bt = build_c2_block_tree(&h, chain)?;
    for j in 2..=r - 1 {
        if j > 2 {
            bt = advance_block_tree(&bt, &h);
        }
        trace(TraceEvent::RoundStart { j, bt: &bt });
        loop {
            bt = refresh_alpha(&bt, &h);
            if bt.alpha_vertices().is_empty() {
                break;
            }
            let mut case = classify_boundary_case(&bt, &h);
            let mut edges: Vec<(usize, usize)> = match &case {
                BoundaryCase::None => main_loop_pair(&bt, &h, ctx).into_iter().collect(),
                c => boundary_augment(&bt, c, &h, ctx),
            };
            if edges.is_empty() && !matches!(case, BoundaryCase::Bc1 { .. }) {
                if let Some(pair) =
                    any_feasible_pair(&bt, &h, ctx).or_else(|| any_nonedge_pair(&bt, &h))
                {
                    edges = vec![pair];
                    case = BoundaryCase::None;
                }
            }
            if edges.is_empty() {
                let state = RoundState {
                    j,
                    h: h.clone(),
                    bt: bt.clone(),
                    eca: eca.clone(),
                };
                return Err(AugError::PatternExhausted {
                    state: state.dump(),
                });
            }
            let tag = match &case {
                BoundaryCase::None => RoundTag::MainLoop { j },
                c => c.tag(),
            };
            for (u, v) in edges {
                h.add_edge(u, v)?;
                eca.push(u, v, tag)?;
                trace(TraceEvent::EdgeAdded { j, edge: (u, v), tag });
            }
        }
        debug_assert!(h.min_degree() >= j + 1, "degree ladder broken at round {j}");
    }
    Ok((h, eca))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bound::augmentation_lower_bound;
    use crate::testutil::{complete, path, spider, star};

    #[test]
    fn star4_r3_reaches_k4() {
        let (h, eca) = nonpath_augmentation(&star(4), 3).unwrap();
        assert_eq!(h, complete(4));
        assert_eq!(eca.edges(), &[(2, 3), (3, 4), (2, 4)]);
        assert_eq!(eca.len(), 3);
        assert_eq!(eca.len(), augmentation_lower_bound(&star(4), 3).unwrap().bound);
    }

    #[test]
    fn star5_r3_builds_a_wheel() {
        let (h, eca) = nonpath_augmentation(&star(5), 3).unwrap();
        assert_eq!(eca.len(), 4);
        assert_eq!(eca.edges()[..3], [(2, 3), (3, 4), (4, 5)]);
        assert_eq!(eca.edges()[3], (2, 5));
        assert_eq!(h.vertex_connectivity().0, 3);
    }

    #[test]
    fn classification_examples() {
        // K_{1,5} chained: pi degrees [1,0,1], alphas non-adjacent -> BC4
        let t = star(5);
        let chain = leaf_chain_edges(&t).unwrap();
        let h = chain.apply_to(&t).unwrap();
        let bt = build_c2_block_tree(&h, &chain).unwrap();
        match classify_boundary_case(&bt, &h) {
            BoundaryCase::Bc4 { alphas } => assert_eq!(alphas, vec![2, 5]),
            other => panic!("expected BC4, got {other:?}"),
        }
    }

    #[test]
    fn single_alpha_is_bc1() {
        // spider 3x1 = star(4); remove one alpha by hand
        let t = star(4);
        let chain = leaf_chain_edges(&t).unwrap();
        let mut h = chain.apply_to(&t).unwrap();
        h.add_edge(2, 4).unwrap(); // consumes both alphas
        // force a single alpha: rebuild on a host where only vertex 2 has
        // degree 2
        let t2 = star(5);
        let chain2 = leaf_chain_edges(&t2).unwrap();
        let mut h2 = chain2.apply_to(&t2).unwrap();
        h2.add_edge(5, 2).unwrap(); // both alphas gone
        let t3 = spider(3, 2);
        let chain3 = leaf_chain_edges(&t3).unwrap();
        let mut h3 = chain3.apply_to(&t3).unwrap();
        // alphas of spider(3,2) chained: degree-2 vertices 2,3,4,6,7
        h3.add_edge(2, 6).unwrap();
        h3.add_edge(3, 7).unwrap();
        let bt = build_c2_block_tree(&h3, &chain3);
        assert!(bt.is_err()); // host has extra edges; build from chain graph
        let clean = chain3.apply_to(&t3).unwrap();
        let bt = build_c2_block_tree(&clean, &chain3).unwrap();
        let bt = refresh_alpha(&bt, &h3);
        match classify_boundary_case(&bt, &h3) {
            BoundaryCase::Bc1 { a } => assert_eq!(a, 4),
            other => panic!("expected BC1, got {other:?}"),
        }
    }

    #[test]
    fn spider_r3_is_exact_and_connected() {
        let t = spider(3, 2);
        let (h, eca) = nonpath_augmentation(&t, 3).unwrap();
        assert_eq!(eca.len(), augmentation_lower_bound(&t, 3).unwrap().bound);
        assert!(h.kappa_at_least(3));
    }

    #[test]
    fn star7_r4_exact() {
        let t = star(7);
        let (h, eca) = nonpath_augmentation(&t, 4).unwrap();
        assert_eq!(eca.len(), augmentation_lower_bound(&t, 4).unwrap().bound);
        assert!(h.kappa_at_least(4));
    }

    #[test]
    fn rejects_unsupported_targets() {
        assert!(matches!(
            nonpath_augmentation(&star(5), 2),
            Err(AugError::UnsupportedTarget)
        ));
        assert!(matches!(
            nonpath_augmentation(&star(5), 5),
            Err(AugError::InvalidTarget { .. })
        ));
        assert!(matches!(
            nonpath_augmentation(&path(5), 3),
            Err(AugError::PathInput)
        ));
    }

    #[test]
    fn degree_ladder_holds() {
        let t = spider(4, 2);
        for r in 3..=5 {
            let (h, _) = nonpath_augmentation(&t, r).unwrap();
            assert!(h.min_degree() >= r, "r={r}");
        }
    }
}
