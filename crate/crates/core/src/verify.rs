//! Independent verification machinery: grade candidate augmentations, find
//! true minima by exhaustive subset search on small instances, and generate
//! tree corpora (seeded random labeled trees, all non-isomorphic trees).

use std::collections::BTreeSet;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::aug::{AugmentationSet, RoundTag};
use crate::bound::augmentation_lower_bound;
use crate::error::{AugError, Result};
use crate::graph::{Graph, SeparatorWitness};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Optimality {
    /// The exhaustive oracle ran and the size equals its minimum.
    ProvenOptimal,
    /// Size equals the degree-deficiency lower bound (hence optimal), but
    /// the oracle did not run.
    MatchesLowerBound,
    Unknown,
}

#[derive(Debug, Clone)]
pub struct AugmentationReport {
    pub n: usize,
    pub r: usize,
    pub input_edge_count: usize,
    pub lower_bound: usize,
    pub eca_size: usize,
    pub achieved_kappa: usize,
    pub optimal: Optimality,
    /// Present exactly when achieved_kappa < r.
    pub witness: Option<SeparatorWitness>,
}

/// Build t + eca, measure its connectivity, and compare |eca| against the
/// lower bound. A candidate that falls short of r carries a concrete
/// separator witness.
pub fn verify_augmentation(t: &Graph, eca: &AugmentationSet, r: usize) -> Result<AugmentationReport> {
    let bound = augmentation_lower_bound(t, r)?;
    let h = eca.apply_to(t)?;
    let (kappa, witness) = h.vertex_connectivity();
    Ok(AugmentationReport {
        n: t.n(),
        r,
        input_edge_count: t.edge_count(),
        lower_bound: bound.bound,
        eca_size: eca.len(),
        achieved_kappa: kappa,
        optimal: if kappa >= r && eca.len() == bound.bound {
            Optimality::MatchesLowerBound
        } else {
            Optimality::Unknown
        },
        witness: if kappa < r { Some(witness) } else { None },
    })
}

/// Resource caps for the exhaustive oracle.
#[derive(Debug, Clone, Copy)]
pub struct OracleBudget {
    pub max_n: usize,
    pub max_r: usize,
    pub max_subsets: u64,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_n: 8,
            max_r: 4,
            max_subsets: 10_000_000,
        }
    }
}

/// Smallest k such that some k-subset of non-edges makes t r-connected,
/// found by lexicographic enumeration starting at the lower bound (no
/// smaller set can exist). Returns the lexicographically first witness.
pub fn brute_force_min_augmentation(
    t: &Graph,
    r: usize,
    budget: OracleBudget,
) -> Result<(usize, AugmentationSet)> {
    if t.n() > budget.max_n {
        return Err(AugError::CapExceeded(format!(
            "n={} exceeds oracle cap {}",
            t.n(),
            budget.max_n
        )));
    }
    if r > budget.max_r {
        return Err(AugError::CapExceeded(format!(
            "r={r} exceeds oracle cap {}",
            budget.max_r
        )));
    }
    let bound = augmentation_lower_bound(t, r)?.bound;
    let n = t.n();
    let non_edges: Vec<(usize, usize)> = (1..=n)
        .flat_map(|u| ((u + 1)..=n).map(move |v| (u, v)))
        .filter(|&(u, v)| !t.has_edge(u, v))
        .collect();
    let mut tried: u64 = 0;
    for k in bound..=non_edges.len() {
        let mut found: Option<Vec<(usize, usize)>> = None;
        for_each_combination(non_edges.len(), k, |indices| {
            tried += 1;
            if tried > budget.max_subsets {
                return ControlFlow::Abort;
            }
            let mut h = t.clone();
            for &i in indices {
                h.add_edge(non_edges[i].0, non_edges[i].1).unwrap();
            }
            if h.kappa_at_least(r) {
                found = Some(indices.iter().map(|&i| non_edges[i]).collect());
                return ControlFlow::Stop;
            }
            ControlFlow::Continue
        });
        if tried > budget.max_subsets {
            return Err(AugError::BudgetExceeded {
                subsets_tried: tried,
                best: None,
            });
        }
        if let Some(edges) = found {
            let mut eca = AugmentationSet::new();
            for (u, v) in edges {
                eca.push(u, v, RoundTag::Oracle)?;
            }
            return Ok((k, eca));
        }
    }
    unreachable!("adding all non-edges yields K_n, which is (n-1)-connected")
}

enum ControlFlow {
    Continue,
    Stop,
    Abort,
}

/// Visit k-combinations of 0..n in lexicographic order.
fn for_each_combination<F: FnMut(&[usize]) -> ControlFlow>(n: usize, k: usize, mut f: F) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        match f(&idx) {
            ControlFlow::Continue => {}
            ControlFlow::Stop | ControlFlow::Abort => return,
        }
        if k == 0 {
            return;
        }
        // advance
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] < n - (k - i) {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
            if i == 0 {
                return;
            }
        }
    }
}

/// Decode a Prüfer sequence (values in 1..=n, length n-2) into the labeled
/// tree it encodes.
pub fn prufer_decode(seq: &[usize], n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(AugError::InvalidSize(n));
    }
    if seq.len() != n - 2 {
        return Err(AugError::Inconsistent(format!(
            "Prüfer sequence for n={n} must have length {}",
            n - 2
        )));
    }
    let mut degree = vec![1usize; n + 1];
    for &x in seq {
        if x < 1 || x > n {
            return Err(AugError::InvalidVertex(x, n));
        }
        degree[x] += 1;
    }
    let mut leaves: BTreeSet<usize> = (1..=n).filter(|&v| degree[v] == 1).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let leaf = *leaves.iter().next().unwrap();
        leaves.remove(&leaf);
        edges.push((leaf, x));
        degree[x] -= 1;
        if degree[x] == 1 {
            leaves.insert(x);
        }
    }
    let mut it = leaves.iter();
    let (u, v) = (*it.next().unwrap(), *it.next().unwrap());
    edges.push((u, v));
    Graph::from_edges(n, edges)
}

/// Uniform random labeled tree via a seeded Prüfer sequence. Deterministic
/// per (n, seed).
pub fn random_tree(n: usize, seed: u64) -> Result<Graph> {
    if n < 2 {
        return Err(AugError::InvalidSize(n));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let seq: Vec<usize> = (0..n.saturating_sub(2))
        .map(|_| rng.gen_range(1..=n))
        .collect();
    prufer_decode(&seq, n)
}

/// AHU canonical form of a tree, invariant under relabeling.
pub fn tree_canonical_form(t: &Graph) -> String {
    assert!(t.is_tree());
    let n = t.n();
    if n == 1 {
        return "()".to_string();
    }
    // peel to the 1- or 2-vertex center
    let mut degree: Vec<usize> = (0..=n).map(|v| if v == 0 { 0 } else { t.degree(v).unwrap() }).collect();
    let mut removed = vec![false; n + 1];
    let mut layer: Vec<usize> = (1..=n).filter(|&v| degree[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        let mut next = Vec::new();
        for &v in &layer {
            removed[v] = true;
            remaining -= 1;
            for w in t.neighbors(v) {
                if !removed[w] {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    let centers: Vec<usize> = (1..=n).filter(|&v| !removed[v]).collect();
    centers
        .iter()
        .map(|&c| encode_rooted(t, c, 0))
        .min()
        .unwrap()
}

fn encode_rooted(t: &Graph, v: usize, parent: usize) -> String {
    let mut kids: Vec<String> = t
        .neighbors(v)
        .filter(|&w| w != parent)
        .map(|w| encode_rooted(t, w, v))
        .collect();
    kids.sort();
    format!("({})", kids.concat())
}

/// All non-isomorphic trees on n vertices, via Prüfer enumeration and
/// canonical-form dedup. Feasible for n <= 9.
pub fn all_trees(n: usize) -> Vec<Graph> {
    assert!((2..=9).contains(&n), "all_trees is desk-scale only");
    if n == 2 {
        return vec![Graph::from_edges(2, [(1, 2)]).unwrap()];
    }
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let len = n - 2;
    let mut seq = vec![1usize; len];
    loop {
        let t = prufer_decode(&seq, n).unwrap();
        if seen.insert(tree_canonical_form(&t)) {
            out.push(t);
        }
        // next sequence in base-n counting
        let mut i = len;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if seq[i] < n {
                seq[i] += 1;
                for s in &mut seq[i + 1..] {
                    *s = 1;
                }
                break;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{path, star};

    #[test]
    fn verify_p4_cycle_closure() {
        let mut eca = AugmentationSet::new();
        eca.push(1, 4, RoundTag::CycleClosure).unwrap();
        let report = verify_augmentation(&path(4), &eca, 2).unwrap();
        assert_eq!(report.achieved_kappa, 2);
        assert_eq!(report.eca_size, 1);
        assert_eq!(report.lower_bound, 1);
        assert_eq!(report.optimal, Optimality::MatchesLowerBound);
        assert!(report.witness.is_none());
    }

    #[test]
    fn verify_reports_failure_witness() {
        let eca = AugmentationSet::new();
        let report = verify_augmentation(&path(4), &eca, 2).unwrap();
        assert_eq!(report.achieved_kappa, 1);
        let w = report.witness.expect("cut vertex expected");
        assert_eq!(w.size(), 1);
    }

    #[test]
    fn verify_rejects_existing_edges() {
        let mut eca = AugmentationSet::new();
        eca.push(1, 2, RoundTag::CycleClosure).unwrap();
        assert!(verify_augmentation(&path(4), &eca, 2).is_err());
    }

    #[test]
    fn oracle_small_instances() {
        let budget = OracleBudget::default();
        let (size, eca) = brute_force_min_augmentation(&path(4), 2, budget).unwrap();
        assert_eq!(size, 1);
        let report = verify_augmentation(&path(4), &eca, 2).unwrap();
        assert!(report.achieved_kappa >= 2);

        let (size, _) = brute_force_min_augmentation(&star(4), 3, budget).unwrap();
        assert_eq!(size, 3);

        let (size, _) = brute_force_min_augmentation(&path(5), 3, budget).unwrap();
        assert_eq!(size, 4);
        assert_eq!(size, augmentation_lower_bound(&path(5), 3).unwrap().bound);
    }

    #[test]
    fn oracle_respects_caps() {
        assert!(matches!(
            brute_force_min_augmentation(&path(9), 2, OracleBudget::default()),
            Err(AugError::CapExceeded(_))
        ));
        let tiny = OracleBudget {
            max_subsets: 1,
            max_r: 4,
            max_n: 8,
        };
        assert!(matches!(
            brute_force_min_augmentation(&path(6), 3, tiny),
            Err(AugError::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn prufer_bijection_small() {
        // n^{n-2} distinct labeled trees for n <= 5 (Cayley)
        for n in 3..=5usize {
            let len = n - 2;
            let mut seen = BTreeSet::new();
            let mut seq = vec![1usize; len];
            loop {
                let t = prufer_decode(&seq, n).unwrap();
                assert!(t.is_tree());
                let edges: Vec<_> = t.edges().collect();
                seen.insert(edges);
                let mut i = len;
                let mut done = false;
                loop {
                    if i == 0 {
                        done = true;
                        break;
                    }
                    i -= 1;
                    if seq[i] < n {
                        seq[i] += 1;
                        for s in &mut seq[i + 1..] {
                            *s = 1;
                        }
                        break;
                    }
                }
                if done {
                    break;
                }
            }
            assert_eq!(seen.len(), n.pow(n as u32 - 2));
        }
    }

    #[test]
    fn random_tree_contract() {
        assert!(random_tree(1, 0).is_err());
        let t = random_tree(2, 99).unwrap();
        assert_eq!(t.edges().collect::<Vec<_>>(), vec![(1, 2)]);
        let a = random_tree(9, 42).unwrap();
        let b = random_tree(9, 42).unwrap();
        assert_eq!(a, b);
        assert!(a.is_tree());
        let c = random_tree(9, 43).unwrap();
        assert!(c.is_tree());
    }

    #[test]
    fn tree_counts_match_oeis() {
        // numbers of non-isomorphic trees: 1, 1, 2, 3, 6, 11, 23
        let expect = [(3, 1), (4, 2), (5, 3), (6, 6), (7, 11), (8, 23)];
        for (n, count) in expect {
            assert_eq!(all_trees(n).len(), count, "n={n}");
        }
    }
}
