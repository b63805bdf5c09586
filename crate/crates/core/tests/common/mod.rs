#![allow(dead_code)]
//! Random instances and independent oracles shared by the integration tests.
//! Nothing here goes through the rewriting, derivative or orbit code under
//! test; oracles work directly on arrow words and explicit matrices.

use std::collections::{BTreeMap, HashMap};

use gdgcat::gqa::{AlgElement, ArrowId, ArrowSpec, Coeff, GradedQuiver, Path};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn q(k: i64) -> Coeff {
    Coeff::from_integer(BigInt::from(k))
}

pub fn vertex_names(k: usize) -> Vec<String> {
    (1..=k).map(|i| i.to_string()).collect()
}

/// Acyclic quiver: every arrow goes from a smaller to a larger vertex.
pub fn random_acyclic(rng: &mut StdRng, vertices: usize, arrows: usize, min_degree: i64) -> GradedQuiver {
    let names = vertex_names(vertices);
    let mut specs = Vec::new();
    for k in 0..arrows {
        let s = rng.gen_range(0..vertices - 1);
        let t = rng.gen_range(s + 1..vertices);
        let d = rng.gen_range(min_degree..=0);
        specs.push(ArrowSpec::new(&format!("x{k}"), &names[s], &names[t], d));
    }
    GradedQuiver::new(names, specs).unwrap()
}

/// Arbitrary quiver (loops and cycles allowed) with degrees in `lo..=hi`.
pub fn random_quiver(rng: &mut StdRng, vertices: usize, arrows: usize, lo: i64, hi: i64) -> GradedQuiver {
    let names = vertex_names(vertices);
    let specs = (0..arrows)
        .map(|k| {
            let s = rng.gen_range(0..vertices);
            let t = rng.gen_range(0..vertices);
            ArrowSpec::new(&format!("x{k}"), &names[s], &names[t], rng.gen_range(lo..=hi))
        })
        .collect::<Vec<_>>();
    GradedQuiver::new(names, specs).unwrap()
}

/// Composable words (written order: the last letter acts first).
pub fn words_of_length(qv: &GradedQuiver, len: usize) -> Vec<Vec<ArrowId>> {
    fn grow(qv: &GradedQuiver, word: &mut Vec<ArrowId>, len: usize, out: &mut Vec<Vec<ArrowId>>) {
        if word.len() == len {
            out.push(word.clone());
            return;
        }
        for (id, a) in qv.arrows() {
            let ok = match word.last() {
                None => true,
                Some(prev) => qv.arrow(*prev).source == a.target,
            };
            if ok {
                word.push(id);
                grow(qv, word, len, out);
                word.pop();
            }
        }
    }
    let mut out = Vec::new();
    if len > 0 {
        grow(qv, &mut Vec::new(), len, &mut out);
    }
    out
}

pub fn cycles_of_length(qv: &GradedQuiver, len: usize) -> Vec<Vec<ArrowId>> {
    words_of_length(qv, len)
        .into_iter()
        .filter(|w| qv.arrow(w[w.len() - 1]).source == qv.arrow(w[0]).target)
        .collect()
}

pub fn word_degree(qv: &GradedQuiver, w: &[ArrowId]) -> i64 {
    w.iter().map(|a| qv.arrow(*a).degree).sum()
}

/// Number of paths (including idempotents) of an acyclic quiver.
pub fn count_paths_acyclic(qv: &GradedQuiver) -> usize {
    // paths ending at v, by vertex, in topological order of names "1".."k"
    let k = qv.vertex_count();
    let mut into = vec![1usize; k];
    let mut order: Vec<_> = qv.vertex_ids().collect();
    order.sort_by_key(|v| qv.vertex_name(*v).parse::<usize>().unwrap());
    for v in order {
        for (_, a) in qv.arrows() {
            if a.target == v {
                into[v.index()] += into[a.source.index()];
            }
        }
    }
    into.iter().sum()
}

/// `∂_a` of a single written word `p` by splitting `p = u a v` into `± v u`
/// with sign `(-1)^{|u|(|a|+|v|)}`.
pub fn oracle_cyclic_derivative(qv: &GradedQuiver, word: &[ArrowId], a: ArrowId) -> Vec<(i64, Vec<ArrowId>)> {
    let mut out = Vec::new();
    for k in 0..word.len() {
        if word[k] != a {
            continue;
        }
        let u = &word[..k];
        let v = &word[k + 1..];
        let du = word_degree(qv, u);
        let dav = qv.arrow(a).degree + word_degree(qv, v);
        let s = if (du * dav).rem_euclid(2) == 0 { 1 } else { -1 };
        let mut vu = v.to_vec();
        vu.extend_from_slice(u);
        out.push((s, vu));
    }
    out
}

/// Turns an oracle word into an algebra element; empty words become the
/// idempotent at `vertex`.
pub fn word_element(qv: &GradedQuiver, terms: &[(Coeff, Vec<ArrowId>)], empty_at: Option<gdgcat::gqa::VertexId>) -> AlgElement {
    let mut x = AlgElement::zero();
    for (c, w) in terms {
        let p = if w.is_empty() {
            qv.idempotent(empty_at.expect("vertex for empty word"))
        } else {
            qv.path(w).expect("composable oracle word")
        };
        x.add_term(c.clone(), p);
    }
    x
}

/// All paths of length exactly `len`, idempotents for `len == 0`.
pub fn paths_of_length(qv: &GradedQuiver, len: usize) -> Vec<Path> {
    if len == 0 {
        return qv.vertex_ids().map(|v| qv.idempotent(v)).collect();
    }
    words_of_length(qv, len).iter().map(|w| qv.path(w).unwrap()).collect()
}

/// Exact rank of a set of sparse rational rows.
pub fn rank(rows: Vec<BTreeMap<usize, Coeff>>) -> usize {
    let mut pivots: BTreeMap<usize, BTreeMap<usize, Coeff>> = BTreeMap::new();
    for mut row in rows {
        loop {
            let Some((&lead, lc)) = row.iter().next() else { break };
            let lc = lc.clone();
            match pivots.get(&lead) {
                Some(p) => {
                    for (col, v) in p {
                        let e = row.entry(*col).or_insert_with(Coeff::zero);
                        *e -= &lc * v;
                        if e.is_zero() {
                            row.remove(col);
                        }
                    }
                }
                None => {
                    let inv = Coeff::one() / lc;
                    let normed = row.into_iter().map(|(c, v)| (c, v * &inv)).collect();
                    pivots.insert(lead, normed);
                    break;
                }
            }
        }
    }
    pivots.len()
}

/// Dimensions, by path length `0..=max_len`, of the path algebra modulo the
/// two-sided ideal of `relations`, each relation homogeneous in path length.
/// Component `k` is the span of length-`k` paths modulo `{u r v}` of that
/// length.
pub fn oracle_quotient_dims(qv: &GradedQuiver, relations: &[AlgElement], max_len: usize) -> Vec<usize> {
    let by_len: Vec<Vec<Path>> = (0..=max_len).map(|k| paths_of_length(qv, k)).collect();
    let mut dims = Vec::new();
    for k in 0..=max_len {
        let index: HashMap<&Path, usize> = by_len[k].iter().enumerate().map(|(i, p)| (p, i)).collect();
        let mut rows = Vec::new();
        for r in relations {
            let Some(first) = r.paths().next() else { continue };
            let rl = first.len();
            if rl > k {
                continue;
            }
            for i in 0..=k - rl {
                for u in &by_len[i] {
                    if u.source() != first.target() {
                        continue;
                    }
                    for v in &by_len[k - rl - i] {
                        if v.target() != first.source() {
                            continue;
                        }
                        let mut row = BTreeMap::new();
                        for (t, c) in r.iter() {
                            let mut w = u.arrows().to_vec();
                            w.extend_from_slice(t.arrows());
                            w.extend_from_slice(v.arrows());
                            let p = if w.is_empty() { u.clone() } else { qv.path(&w).unwrap() };
                            *row.entry(index[&p]).or_insert_with(Coeff::zero) += c;
                        }
                        row.retain(|_, c: &mut Coeff| !c.is_zero());
                        if !row.is_empty() {
                            rows.push(row);
                        }
                    }
                }
            }
        }
        dims.push(by_len[k].len() - rank(rows));
    }
    dims
}

/// `Σ^s [i, j]` in `ZA_n` coordinates: `[i, j] ↦ (i, j - i + 1)`,
/// `Σ(p, q) = (p + q, n + 1 - q)`.
pub fn mesh_point(n: usize, i: usize, j: usize, shift: i64) -> (i64, i64) {
    let n = n as i64;
    let (mut p, mut qq) = (i as i64, (j - i + 1) as i64);
    for _ in 0..shift.max(0) {
        (p, qq) = (p + qq, n + 1 - qq);
    }
    for _ in 0..(-shift).max(0) {
        (p, qq) = (p - (n + 1 - qq), n + 1 - qq);
    }
    (p, qq)
}

type Matrix = Vec<Vec<Coeff>>;

/// `dim Hom(x, z)` in the mesh category of `ZA_n`, computed by building the
/// representable functor `Hom(x, -)` vertex by vertex: away from `x`, its
/// value at `z` is the cokernel of `Hom(x, τz) → ⊕_{w → z} Hom(x, w)`.
pub fn mesh_hom(n: usize, x: (i64, i64), z: (i64, i64)) -> usize {
    let n = n as i64;
    let h = |v: (i64, i64)| 2 * v.0 + v.1;
    let (hx, hz) = (h(x), h(z));
    if hz < hx {
        return 0;
    }
    let mut dim: HashMap<(i64, i64), usize> = HashMap::new();
    let mut maps: HashMap<((i64, i64), (i64, i64)), Matrix> = HashMap::new();
    for level in hx..=hz {
        for qq in 1..=n {
            if (level - qq).rem_euclid(2) != 0 {
                continue;
            }
            let v = ((level - qq) / 2, qq);
            if v == x {
                dim.insert(v, 1);
                continue;
            }
            if level == hx {
                continue;
            }
            let (p, qq) = v;
            let preds: Vec<(i64, i64)> = [(p, qq - 1), (p - 1, qq + 1)]
                .into_iter()
                .filter(|w| (1..=n).contains(&w.1))
                .collect();
            let offsets: Vec<usize> = preds
                .iter()
                .scan(0, |acc, w| {
                    let o = *acc;
                    *acc += dim.get(w).copied().unwrap_or(0);
                    Some(o)
                })
                .collect();
            let total: usize = preds.iter().map(|w| dim.get(w).copied().unwrap_or(0)).sum();
            if total == 0 {
                continue;
            }
            // image of Hom(x, τv): one vector in k^total per basis element
            let t = (p - 1, qq);
            let dt = dim.get(&t).copied().unwrap_or(0);
            let mut image = Vec::new();
            for col in 0..dt {
                let mut vec = BTreeMap::new();
                for (w, off) in preds.iter().zip(&offsets) {
                    if let Some(m) = maps.get(&(t, *w)) {
                        for (r, row) in m.iter().enumerate() {
                            if !row[col].is_zero() {
                                vec.insert(off + r, row[col].clone());
                            }
                        }
                    }
                }
                image.push(vec);
            }
            let rref = reduced(image, total);
            let pivot_cols: Vec<usize> = rref.iter().map(|r| *r.keys().next().unwrap()).collect();
            let free: Vec<usize> = (0..total).filter(|c| !pivot_cols.contains(c)).collect();
            if free.is_empty() {
                continue;
            }
            // quotient map k^total -> k^free
            let mut quotient: Matrix = vec![vec![Coeff::zero(); total]; free.len()];
            for (r, c) in free.iter().enumerate() {
                quotient[r][*c] = Coeff::one();
            }
            for row in &rref {
                let pc = *row.keys().next().unwrap();
                for (r, c) in free.iter().enumerate() {
                    if let Some(val) = row.get(c) {
                        quotient[r][pc] = -val.clone();
                    }
                }
            }
            for (w, off) in preds.iter().zip(&offsets) {
                let dw = dim.get(w).copied().unwrap_or(0);
                if dw == 0 {
                    continue;
                }
                let block: Matrix = quotient.iter().map(|row| row[*off..off + dw].to_vec()).collect();
                maps.insert((*w, v), block);
            }
            dim.insert(v, free.len());
        }
    }
    dim.get(&z).copied().unwrap_or(0)
}

/// Reduced row echelon form of sparse rows over `k^width`.
fn reduced(rows: Vec<BTreeMap<usize, Coeff>>, width: usize) -> Vec<BTreeMap<usize, Coeff>> {
    let mut dense: Vec<Vec<Coeff>> = rows
        .into_iter()
        .map(|r| {
            let mut v = vec![Coeff::zero(); width];
            for (c, x) in r {
                v[c] = x;
            }
            v
        })
        .collect();
    let mut out_rows = 0;
    for col in 0..width {
        let Some(pr) = (out_rows..dense.len()).find(|&r| !dense[r][col].is_zero()) else { continue };
        dense.swap(out_rows, pr);
        let inv = Coeff::one() / dense[out_rows][col].clone();
        for x in dense[out_rows].iter_mut() {
            *x *= &inv;
        }
        let pivot = dense[out_rows].clone();
        for (r, row) in dense.iter_mut().enumerate() {
            if r != out_rows && !row[col].is_zero() {
                let f = row[col].clone();
                for (x, p) in row.iter_mut().zip(&pivot) {
                    *x -= &f * p;
                }
            }
        }
        out_rows += 1;
    }
    dense
        .into_iter()
        .take(out_rows)
        .map(|r| r.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect())
        .collect()
}

/// `F = τ⁻¹Σᵐ` on mesh coordinates.
pub fn mesh_f(n: usize, v: (i64, i64), m: usize, k: i64) -> (i64, i64) {
    let nn = n as i64;
    let mut v = v;
    for _ in 0..k.unsigned_abs() {
        if k > 0 {
            for _ in 0..m {
                v = (v.0 + v.1, nn + 1 - v.1);
            }
            v.0 += 1;
        } else {
            v.0 -= 1;
            for _ in 0..m {
                v = (v.0 - (nn + 1 - v.1), nn + 1 - v.1);
            }
        }
    }
    v
}

/// Orbit-category Hom by summing the mesh oracle over `F^k`, `|k| ≤ reach`.
pub fn mesh_orbit_hom(n: usize, m: usize, x: (i64, i64), y: (i64, i64), reach: i64) -> usize {
    (-reach..=reach).map(|k| mesh_hom(n, x, mesh_f(n, y, m, k))).sum()
}

pub const EXAMPLE: &str = "\
vertex 1; vertex 2; vertex 3;
arrow a : 1 -> 2 deg -1;
arrow b : 3 -> 1 deg 0;
arrow c : 2 -> 3 deg 0;
n = 4;
potential = a b c;
";

pub fn example_path() -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("examples/example34.qp")
}
