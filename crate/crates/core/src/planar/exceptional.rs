//! `+-2`-valued trace functions on the `n`-holed sphere that are constant on
//! each boundary split, and the exceptional ones among them.
//!
//! A separating curve is recorded by the set of boundary components on one
//! side, normalized to the side missing `b_n`. Boundary `b_i` is `{i}` for
//! `i < n` and everything but `b_n` for `b_n`.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use serde_json::{json, Map, Value};

use super::glue::{glue_sigma05, Glue, TraceData05};
use crate::error::{Error, Result};
use crate::poly::Subset;
use crate::scalar::{Field, QuadClosed};
use crate::sl2::delta_of_traces;
use crate::surfchar::{pm2_check, tf04_residual, Pm2Verdict};

/// Largest surface the enumeration accepts. The search itself is only
/// practical up to about 8.
pub const MAX_N: usize = 12;

fn full(n: usize) -> Subset {
    (1 << n) - 1
}

fn canonical(n: usize, s: Subset) -> Subset {
    if s >> (n - 1) & 1 == 1 {
        full(n) ^ s
    } else {
        s
    }
}

fn label(s: Subset) -> String {
    (0..32).filter(|i| s >> i & 1 == 1).map(|i| (i + 1).to_string()).collect::<Vec<_>>().join(",")
}

/// Set partitions of `0..n` into exactly `k` blocks, as bit masks.
pub fn partitions(n: usize, k: usize) -> Vec<Vec<Subset>> {
    fn go(i: usize, n: usize, k: usize, cur: &mut Vec<Subset>, out: &mut Vec<Vec<Subset>>) {
        if cur.len() + (n - i) < k {
            return;
        }
        if i == n {
            out.push(cur.clone());
            return;
        }
        for b in 0..cur.len() {
            cur[b] |= 1 << i;
            go(i + 1, n, k, cur, out);
            cur[b] ^= 1 << i;
        }
        if cur.len() < k {
            cur.push(1 << i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// A `+-2`-valued function on the boundary splits of the `n`-holed sphere.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PartitionTF {
    n: usize,
    values: BTreeMap<Subset, i64>,
}

impl PartitionTF {
    /// All splits, boundaries first, then by size of the smaller side.
    pub fn splits(n: usize) -> Vec<Subset> {
        let mut s: Vec<Subset> = (1..full(n)).filter(|s| s >> (n - 1) & 1 == 0).collect();
        let size = |s: &Subset| {
            let k = s.count_ones() as usize;
            k.min(n - k)
        };
        s.sort_by_key(|s| (size(s), *s));
        s
    }

    pub fn from_fn(n: usize, f: impl Fn(Subset) -> i64) -> Result<Self> {
        if !(4..=16).contains(&n) {
            return Err(Error::Invalid(format!("n = {n} is out of range")));
        }
        let values: BTreeMap<Subset, i64> = PartitionTF::splits(n).into_iter().map(|s| (s, f(s))).collect();
        if values.values().any(|v| v.abs() != 2) {
            return Err(Error::Invalid("values must be 2 or -2".into()));
        }
        Ok(PartitionTF { n, values })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The value on the curve cutting off `s`, or on a boundary for singletons
    /// and their complements.
    pub fn value(&self, s: Subset) -> i64 {
        self.values[&canonical(self.n, s)]
    }

    pub fn boundary(&self) -> Vec<i64> {
        (0..self.n).map(|i| self.value(1 << i)).collect()
    }

    pub fn values(&self) -> &BTreeMap<Subset, i64> {
        &self.values
    }

    /// The same function with the value on `s` negated.
    pub fn flipped(&self, s: Subset) -> Self {
        let mut f = self.clone();
        *f.values.get_mut(&canonical(self.n, s)).unwrap() *= -1;
        f
    }

    /// The boundary `+-2` values extended by `f(alpha) = -f(b_i) f(b_j) / 2`.
    pub fn pair_rule(boundary: [i64; 5]) -> Result<Self> {
        PartitionTF::from_fn(5, |s| {
            let idx: Vec<usize> = (0..5).filter(|i| s >> i & 1 == 1).collect();
            match idx[..] {
                [i] => boundary[i],
                [i, j] => -boundary[i] * boundary[j] / 2,
                [i, j, k] => {
                    let rest: Vec<usize> = (0..5).filter(|m| ![i, j, k].contains(m)).collect();
                    -boundary[rest[0]] * boundary[rest[1]] / 2
                }
                _ => boundary[4],
            }
        })
    }

    /// On `n >= 5` holes: boundary 2, and `-2` exactly on the curves splitting
    /// `b_1, ..., b_5` two against three. Filling `b_6, ..., b_n` with discs
    /// sends it to the `n = 5` function with all boundary values 2.
    pub fn construction(n: usize) -> Result<Self> {
        PartitionTF::from_fn(n, |s| {
            let k = (s & 0b11111).count_ones();
            let sides = (k, s.count_ones());
            if sides.1 == 1 || sides.1 as usize == n - 1 || k.min(5 - k) != 2 {
                2
            } else {
                -2
            }
        })
    }

    /// Values on the five-holed sphere whose boundary components are the
    /// unions of the blocks.
    pub fn restrict(&self, blocks: &[Subset; 5]) -> PartitionTF {
        PartitionTF::from_fn(5, |s| {
            let u = (0..5).filter(|i| s >> i & 1 == 1).fold(0, |a, i| a | blocks[i]);
            self.value(u)
        })
        .expect("values stay +-2")
    }

    /// The fifteen values in the rank-4 atlas: `x_S` for `S` in `{1, 2, 3, 4}`,
    /// with `x1x2x3x4` around `b_5`.
    pub fn trace_data<F: Field>(&self, like: &F) -> Result<TraceData05<F>> {
        if self.n != 5 {
            return Err(Error::Invalid("trace data needs the five-holed sphere".into()));
        }
        Ok(TraceData05::from_fn(|s| like.from_i64_like(self.value(s))))
    }

    pub fn to_json(&self) -> Value {
        let mut interior = Map::new();
        for (&s, v) in &self.values {
            let k = s.count_ones() as usize;
            if k >= 2 && k <= self.n - 2 {
                interior.insert(label(s), json!(v));
            }
        }
        json!({ "n": self.n, "boundary": self.boundary(), "interior": interior })
    }
}

/// Index of each split and the seven indices of each embedded four-holed sphere.
struct Tables {
    splits: Vec<Subset>,
    /// constraints keyed by their largest split index
    by_last: Vec<Vec<([usize; 4], [usize; 3])>>,
}

impl Tables {
    /// Splits are ordered greedily so that constraints close as early as
    /// possible; boundary values come first.
    fn new(n: usize) -> Tables {
        let all = PartitionTF::splits(n);
        let cons: Vec<[Subset; 7]> = partitions(n, 4)
            .into_iter()
            .map(|p| [p[0], p[1], p[2], p[3], p[0] | p[1], p[1] | p[2], p[0] | p[2]].map(|s| canonical(n, s)))
            .collect();
        let mut splits: Vec<Subset> = all[..n].to_vec();
        let mut placed: std::collections::BTreeSet<Subset> = splits.iter().copied().collect();
        while splits.len() < all.len() {
            // prefer closing constraints, then leaving as few open slots as possible
            let score = |s: Subset| {
                let mut open = [0usize; 7];
                for c in cons.iter().filter(|c| c.contains(&s)) {
                    open[c.iter().filter(|x| **x != s && !placed.contains(x)).count()] += 1;
                }
                open
            };
            let next = *all.iter().filter(|s| !placed.contains(s)).max_by_key(|s| (score(**s), std::cmp::Reverse(**s))).unwrap();
            splits.push(next);
            placed.insert(next);
        }
        let index: BTreeMap<Subset, usize> = splits.iter().enumerate().map(|(i, s)| (*s, i)).collect();
        let mut by_last = vec![Vec::new(); splits.len()];
        for c in cons {
            let i = c.map(|s| index[&s]);
            let b = [i[0], i[1], i[2], i[3]];
            let a = [i[4], i[5], i[6]];
            by_last[*i.iter().max().unwrap()].push((b, a));
        }
        Tables { splits, by_last }
    }
}

/// Functions passing every embedded four-holed-sphere relation, over the field
/// of `like`, with values in `{2, -2}` (one value in characteristic 2).
fn consistent_functions<F: Field>(n: usize, like: &F, jobs: usize) -> Vec<PartitionTF> {
    let domain: Vec<i64> = if like.characteristic() == 2 { vec![2] } else { vec![2, -2] };
    let d = domain.len();
    let el: Vec<F> = domain.iter().map(|v| like.from_i64_like(*v)).collect();
    // residual table over the seven value indices
    let mut ok = vec![false; d.pow(7)];
    for (code, slot) in ok.iter_mut().enumerate() {
        let digit = |k: u32| el[code / d.pow(k) % d].clone();
        let b = [digit(0), digit(1), digit(2), digit(3)];
        let a = [digit(4), digit(5), digit(6)];
        *slot = tf04_residual(&b, &a).is_zero();
    }
    let t = Tables::new(n);
    let passes = |vals: &[usize], i: usize| {
        t.by_last[i].iter().all(|(b, a)| {
            let code = b.iter().chain(a).rev().fold(0, |c, &k| c * d + vals[k]);
            ok[code]
        })
    };
    fn dfs(i: usize, vals: &mut Vec<usize>, d: usize, passes: &dyn Fn(&[usize], usize) -> bool, out: &mut Vec<Vec<usize>>) {
        if i == vals.len() {
            out.push(vals.clone());
            return;
        }
        for v in 0..d {
            vals[i] = v;
            if passes(vals, i) {
                dfs(i + 1, vals, d, passes, out);
            }
        }
    }
    // boundary assignments are independent jobs
    let tasks = d.pow(n as u32);
    let next = AtomicUsize::new(0);
    let found = Mutex::new(BTreeMap::new());
    std::thread::scope(|scope| {
        for _ in 0..jobs.max(1).min(tasks) {
            scope.spawn(|| loop {
                let task = next.fetch_add(1, Ordering::Relaxed);
                if task >= tasks {
                    break;
                }
                let mut vals = vec![0; t.splits.len()];
                let mut viable = true;
                for i in 0..n {
                    vals[i] = task / d.pow(i as u32) % d;
                    viable &= passes(&vals, i);
                }
                let mut out = Vec::new();
                if viable {
                    dfs(n, &mut vals, d, &passes, &mut out);
                }
                found.lock().unwrap().insert(task, out);
            });
        }
    });
    found
        .into_inner()
        .unwrap()
        .into_values()
        .flatten()
        .map(|vals| {
            let values = t.splits.iter().zip(vals).map(|(s, v)| (*s, domain[v])).collect();
            PartitionTF { n, values }
        })
        .collect()
}

/// A five-block partition on which `f` looks exceptional: boundary product 32
/// and every pants `(alpha, b_i, b_j)` irreducible.
pub fn exceptional_witness<F: Field>(f: &PartitionTF, like: &F) -> Option<[Subset; 5]> {
    let v = |s: Subset| like.from_i64_like(f.value(s));
    partitions(f.n, 5).into_iter().find_map(|p| {
        let blocks: [Subset; 5] = p.try_into().ok()?;
        let prod = blocks.iter().fold(like.one_like(), |acc, b| acc * v(*b));
        if prod != like.from_i64_like(32) {
            return None;
        }
        let irreducible = (0..5).all(|i| (i + 1..5).all(|j| !delta_of_traces(&v(blocks[i] | blocks[j]), &v(blocks[i]), &v(blocks[j])).is_zero()));
        irreducible.then_some(blocks)
    })
}

/// `+-2` functions passing every embedded four-holed-sphere relation and
/// having an exceptional five-holed subsurface. Empty in characteristic 2.
pub fn pm2_exceptional_search<F: Field>(n: usize, like: &F, jobs: usize) -> Result<Vec<PartitionTF>> {
    if !(5..=MAX_N).contains(&n) {
        return Err(Error::Invalid(format!("n must be between 5 and {MAX_N}, got {n}")));
    }
    Ok(consistent_functions(n, like, jobs).into_iter().filter(|f| exceptional_witness(f, like).is_some()).collect())
}

/// All exceptional functions in the `+-2` family on the `n`-holed sphere.
pub fn exceptional_enumerate<F: Field>(n: usize, like: &F, jobs: usize) -> Result<Vec<PartitionTF>> {
    if like.characteristic() == 2 {
        return Err(Error::Invalid("there are no exceptional trace functions in characteristic 2".into()));
    }
    pm2_exceptional_search(n, like, jobs)
}

/// Number of orbits under relabeling the boundary.
pub fn orbit_count(fs: &[PartitionTF]) -> usize {
    let Some(n) = fs.first().map(|f| f.n) else { return 0 };
    let splits = PartitionTF::splits(n);
    let index: BTreeMap<Subset, usize> = splits.iter().enumerate().map(|(i, s)| (*s, i)).collect();
    let mut perms: Vec<Vec<usize>> = vec![vec![]];
    for k in 0..n {
        perms = perms
            .into_iter()
            .flat_map(|p| {
                (0..=k).map(move |i| {
                    let mut q = p.clone();
                    q.insert(i, k);
                    q
                })
            })
            .collect();
    }
    // each permutation as a map on split indices
    let actions: Vec<Vec<usize>> = perms
        .iter()
        .map(|p| {
            splits
                .iter()
                .map(|&s| index[&canonical(n, (0..n).filter(|i| s >> i & 1 == 1).fold(0, |a, i| a | 1 << p[i]))])
                .collect()
        })
        .collect();
    let mut seen = std::collections::HashSet::new();
    let mut orbits = 0;
    for f in fs {
        let v: Vec<i64> = splits.iter().map(|s| f.values[s]).collect();
        if seen.contains(&v) {
            continue;
        }
        orbits += 1;
        for act in &actions {
            let mut w = vec![0; v.len()];
            for (i, &j) in act.iter().enumerate() {
                w[j] = v[i];
            }
            seen.insert(w);
        }
    }
    orbits
}

#[derive(Debug, Clone, PartialEq)]
pub struct Certificate {
    /// first embedded four-holed sphere failing the `+-2` check
    pub pm2: std::result::Result<(), String>,
    /// the five-holed subsurface examined, as boundary blocks
    pub witness: Option<[Subset; 5]>,
    /// pants `(alpha, b_i, b_j)` irreducible and `(alpha, beta, b_m)` reducible
    pub level0: std::result::Result<(), String>,
    pub obstruction: bool,
}

impl Certificate {
    pub fn exceptional(&self) -> bool {
        self.pm2.is_ok() && self.level0.is_ok() && self.obstruction
    }
}

/// Check the three ingredients of exceptionality.
pub fn certify_exceptional<F: QuadClosed>(f: &PartitionTF, like: &F) -> Result<Certificate> {
    let v = |s: Subset| like.from_i64_like(f.value(s));
    let mut pm2 = Ok(());
    for p in partitions(f.n, 4) {
        let b = [v(p[0]), v(p[1]), v(p[2]), v(p[3])];
        let a = [v(p[0] | p[1]), v(p[1] | p[2]), v(p[0] | p[2])];
        if let (Pm2Verdict::Violation, r) = pm2_check(&b, &a)? {
            let blocks: Vec<String> = p.iter().map(|s| format!("{{{}}}", label(*s))).collect();
            pm2 = Err(format!("residual {r} on {}", blocks.join(" ")));
            break;
        }
    }
    let blocks: [Subset; 5] = match exceptional_witness(f, like) {
        Some(w) => w,
        None if f.n == 5 => [1, 2, 4, 8, 16],
        None => return Ok(Certificate { pm2, witness: None, level0: Err("no exceptional five-holed subsurface".into()), obstruction: false }),
    };
    let g = f.restrict(&blocks);
    let w = |s: Subset| like.from_i64_like(g.value(s));
    let mut level0 = Ok(());
    'outer: for i in 0..5 {
        for j in i + 1..5 {
            let alpha = (1 << i) | (1 << j);
            if delta_of_traces(&w(alpha), &w(1 << i), &w(1 << j)).is_zero() {
                level0 = Err(format!("pants ({{{}}}, b{}, b{}) is reducible", label(alpha), i + 1, j + 1));
                break 'outer;
            }
            for k in (0..5).filter(|k| alpha >> k & 1 == 0) {
                for l in (k + 1..5).filter(|l| alpha >> l & 1 == 0) {
                    let beta = (1 << k) | (1 << l);
                    let m = 0b11111 ^ alpha ^ beta;
                    if !delta_of_traces(&w(alpha), &w(beta), &w(m)).is_zero() {
                        level0 = Err(format!("pants ({{{}}}, {{{}}}, b{}) is irreducible", label(alpha), label(beta), m.trailing_zeros() + 1));
                        break 'outer;
                    }
                }
            }
        }
    }
    let obstruction = matches!(glue_sigma05(&g.trace_data(like)?), Ok(Glue::Obstruction));
    Ok(Certificate { pm2, witness: Some(blocks), level0, obstruction })
}
