//! Oracles shared by the integration tests. Nothing here calls into the
//! search or inertia code it is used to check.
#![allow(dead_code)]

use posbraid::braid::Direction;
use posbraid::surface::Graph;
use posbraid::BraidWord;
use rand::Rng;

/// Tries every injective map from target vertices to host vertices and
/// checks adjacency only once a map is complete.
pub fn brute_force_embeds(host: &Graph, target: &Graph) -> bool {
    let (n, k) = (host.vertex_count(), target.vertex_count());
    if k > n {
        return false;
    }
    let host_rows: Vec<u32> = (0..n).map(|v| host.neighbors(v).iter().fold(0, |m, &w| m | 1 << w)).collect();
    let target_edges: Vec<(usize, usize)> =
        (0..k).flat_map(|a| (a + 1..k).map(move |b| (a, b))).collect();
    let mut map = Vec::with_capacity(k);
    fn go(
        map: &mut Vec<usize>,
        used: u32,
        n: usize,
        k: usize,
        leaf: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if map.len() == k {
            return leaf(map);
        }
        for h in 0..n {
            if used & (1 << h) == 0 {
                map.push(h);
                if go(map, used | 1 << h, n, k, leaf) {
                    return true;
                }
                map.pop();
            }
        }
        false
    }
    let mut leaf = |m: &[usize]| {
        target_edges
            .iter()
            .all(|&(a, b)| target.has_edge(a, b) == (host_rows[m[a]] >> m[b] & 1 == 1))
    };
    go(&mut map, 0, n, k, &mut leaf)
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

pub fn random_word(rng: &mut impl Rng, max_strands: usize, max_len: usize) -> BraidWord {
    let strands = rng.gen_range(2..=max_strands);
    let len = rng.gen_range(0..=max_len);
    let letters = (0..len).map(|_| rng.gen_range(1..strands)).collect();
    BraidWord::new(strands, letters).unwrap()
}

/// One random cyclic permutation, commutation or braid relation. Falls back
/// to a rotation when the chosen kind of move has no site.
pub fn random_move(rng: &mut impl Rng, w: &BraidWord) -> BraidWord {
    let n = w.len();
    let rotate = |rng: &mut dyn rand::RngCore| w.cyclic_permute(if n == 0 { 0 } else { rng.gen_range(0..n) });
    match rng.gen_range(0..3) {
        0 => rotate(rng),
        1 => {
            let sites: Vec<usize> = (1..n).filter(|&p| w.apply_commutation(p).is_ok()).collect();
            if sites.is_empty() {
                return rotate(rng);
            }
            w.apply_commutation(sites[rng.gen_range(0..sites.len())]).unwrap()
        }
        _ => {
            let sites: Vec<(usize, Direction)> = (1..n.saturating_sub(1))
                .flat_map(|p| [(p, Direction::Up), (p, Direction::Down)])
                .filter(|&(p, d)| w.apply_braid_relation(p, d).is_ok())
                .collect();
            if sites.is_empty() {
                return rotate(rng);
            }
            let (p, d) = sites[rng.gen_range(0..sites.len())];
            w.apply_braid_relation(p, d).unwrap()
        }
    }
}

/// Fraction-free (Bareiss) determinant of an integer matrix.
pub fn bareiss_determinant(m: &[Vec<i64>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            let Some(swap) = (k + 1..n).find(|&i| a[i][k] != 0) else { return 0 };
            a.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

/// Inertia `(positive, negative, zero)` from floating-point eigenvalues.
pub fn eigen_inertia(m: &[Vec<i64>], tol: f64) -> (usize, usize, usize) {
    let n = m.len();
    if n == 0 {
        return (0, 0, 0);
    }
    let mat = nalgebra::DMatrix::from_fn(n, n, |i, j| m[i][j] as f64);
    let eig = nalgebra::SymmetricEigen::new(mat).eigenvalues;
    let pos = eig.iter().filter(|&&x| x > tol).count();
    let neg = eig.iter().filter(|&&x| x < -tol).count();
    (pos, neg, n - pos - neg)
}
