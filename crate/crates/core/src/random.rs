//! Seeded random instance generators. Every generator is a pure function of
//! its seed.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Erdős–Rényi `G(n, p)`.
pub fn gnp(n: usize, p: f64, seed: u64) -> Graph {
    gnp_with(n, p, &mut rng(seed))
}

pub fn gnp_with<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).expect("generated edges are valid")
}

/// A uniformly random labelled tree (random parent attachment, then shuffled labels).
pub fn random_tree<R: Rng>(n: usize, rng: &mut R) -> Graph {
    let mut labels: Vec<usize> = (0..n).collect();
    labels.shuffle(rng);
    let edges: Vec<_> = (1..n).map(|i| (labels[i], labels[rng.gen_range(0..i)])).collect();
    Graph::new(n, &edges).expect("tree edges are valid")
}

/// A random graph with maximum degree at most `max_degree`, built by adding
/// random edges that respect the cap.
pub fn bounded_degree<R: Rng>(n: usize, max_degree: usize, attempts: usize, rng: &mut R) -> Graph {
    let mut deg = vec![0; n];
    let mut edges = Vec::new();
    if n >= 2 {
        for _ in 0..attempts {
            let u = rng.gen_range(0..n);
            let v = rng.gen_range(0..n);
            if u != v && deg[u] < max_degree && deg[v] < max_degree && !edges.contains(&(u.min(v), u.max(v))) {
                deg[u] += 1;
                deg[v] += 1;
                edges.push((u.min(v), u.max(v)));
            }
        }
    }
    Graph::new(n, &edges).expect("generated edges are valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_are_deterministic() {
        assert_eq!(gnp(12, 0.4, 7), gnp(12, 0.4, 7));
        let t = random_tree(15, &mut rng(3));
        assert_eq!(t.m(), 14);
        assert!(t.is_connected());
        let g = bounded_degree(20, 3, 200, &mut rng(1));
        assert!(g.max_degree() <= 3);
    }
}
