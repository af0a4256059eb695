//! Small named categories and seeded random families used by tests, benches
//! and the command-line tool.

use std::collections::BTreeSet;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cover::{filter_closure, ideal_closure, Cover, Subcategory};
use crate::fincat::{CategoryData, FinCategory};

/// `x ⇉ y → z` with both composites equal to `k : x → z`.
pub fn counterexample_data() -> CategoryData {
    CategoryData::new("C")
        .objects(["x", "y", "z"])
        .morphism("f", "x", "y")
        .morphism("g", "x", "y")
        .morphism("h", "y", "z")
        .morphism("k", "x", "z")
        .compose("h", "f", "k")
        .compose("h", "g", "k")
}

pub fn counterexample() -> FinCategory {
    FinCategory::new(&counterexample_data()).expect("valid fixture")
}

/// Full parts `1 = {x, y}` and `2 = {y, z}`. Part 2 is not an ideal.
pub fn counterexample_cover() -> Cover {
    let c = Arc::new(counterexample());
    Cover::full(&c, &[("1", &["x", "y"]), ("2", &["y", "z"])]).expect("valid fixture")
}

/// The poset `a ← c → b`.
pub fn v_poset() -> FinCategory {
    let data = CategoryData::new("V")
        .objects(["a", "b", "c"])
        .morphism("ca", "c", "a")
        .morphism("cb", "c", "b");
    FinCategory::new(&data).expect("valid fixture")
}

/// Ideal parts `1 = {c, a}` and `2 = {c, b}`.
pub fn v_cover() -> Cover {
    let v = Arc::new(v_poset());
    Cover::full(&v, &[("1", &["c", "a"]), ("2", &["c", "b"])]).expect("valid fixture")
}

/// Objects only.
pub fn discrete(n: usize) -> FinCategory {
    let data = CategoryData::new(format!("disc{n}")).objects((0..n).map(|i| format!("p{i}")));
    FinCategory::new(&data).expect("valid fixture")
}

/// The poset on `0..n` whose strict relation is `lt`, which must be
/// transitive and irreflexive. Objects are `p{i}`, morphisms `p{i}<p{j}`.
pub fn poset_category(name: &str, n: usize, lt: impl Fn(usize, usize) -> bool) -> FinCategory {
    let obj = |i: usize| format!("p{i}");
    let mor = |i: usize, j: usize| format!("p{i}<p{j}");
    let mut data = CategoryData::new(name).objects((0..n).map(obj));
    for i in 0..n {
        for j in 0..n {
            if lt(i, j) {
                data = data.morphism(mor(i, j), obj(i), obj(j));
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if lt(i, j) && lt(j, k) {
                    data = data.compose(mor(j, k), mor(i, j), mor(i, k));
                }
            }
        }
    }
    FinCategory::new(&data).expect("poset relation must be a strict order")
}

/// Random strict order on at most `max_n` elements: random edges `i < j`
/// followed by transitive closure.
pub fn random_poset(seed: u64, max_n: usize) -> FinCategory {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(1..=max_n.max(1));
    let density: f64 = rng.gen_range(0.1..0.7);
    let mut lt = vec![vec![false; n]; n];
    for i in 0..n {
        for j in (i + 1)..n {
            lt[i][j] = rng.gen_bool(density);
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if lt[i][k] && lt[k][j] {
                    lt[i][j] = true;
                }
            }
        }
    }
    poset_category(&format!("poset{seed}"), n, |i, j| lt[i][j])
}

/// Free category on a random DAG with parallel edges, so usually not a
/// poset. Morphisms are paths written as dot-joined edge names.
pub fn random_acyclic(seed: u64, max_n: usize) -> FinCategory {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(2..=max_n.max(2));
    let mut edges: Vec<(usize, usize, String)> = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let mult = match rng.gen_range(0..10) {
                0..=4 => 0,
                5..=7 => 1,
                _ => 2,
            };
            for m in 0..mult {
                edges.push((i, j, format!("e{i}{j}{}", (b'a' + m as u8) as char)));
            }
        }
    }
    // Paths as edge-index sequences, grouped by source.
    let mut paths: Vec<(usize, usize, Vec<usize>)> = Vec::new();
    let mut frontier: Vec<(usize, usize, Vec<usize>)> =
        edges.iter().enumerate().map(|(e, (s, t, _))| (*s, *t, vec![e])).collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for (s, t, p) in &frontier {
            for (e, (s2, t2, _)) in edges.iter().enumerate() {
                if s2 == t {
                    let mut q = p.clone();
                    q.push(e);
                    next.push((*s, *t2, q));
                }
            }
        }
        paths.append(&mut frontier);
        frontier = next;
    }
    let obj = |i: usize| format!("v{i}");
    // Composition order: the last edge is written first.
    let name = |p: &[usize]| {
        p.iter()
            .rev()
            .map(|&e| edges[e].2.as_str())
            .collect::<Vec<_>>()
            .join(".")
    };
    let mut data = CategoryData::new(format!("dag{seed}")).objects((0..n).map(obj));
    for (s, t, p) in &paths {
        data = data.morphism(name(p), obj(*s), obj(*t));
    }
    for (_, t1, p1) in &paths {
        for (s2, _, p2) in &paths {
            if t1 == s2 {
                let mut whole = p1.clone();
                whole.extend_from_slice(p2);
                data = data.compose(name(p2), name(p1), name(&whole));
            }
        }
    }
    FinCategory::new(&data).expect("free category is valid")
}

fn random_groups(rng: &mut ChaCha8Rng, n: usize, max_parts: usize) -> Vec<BTreeSet<usize>> {
    let parts = rng.gen_range(1..=max_parts.max(1));
    let mut groups = vec![BTreeSet::new(); parts];
    for x in 0..n {
        groups[rng.gen_range(0..parts)].insert(x);
        // Occasional extra membership to create overlaps.
        if rng.gen_bool(0.25) {
            groups[rng.gen_range(0..parts)].insert(x);
        }
    }
    groups.retain(|g| !g.is_empty());
    groups
}

fn labelled(cat: &Arc<FinCategory>, parts: Vec<Subcategory>) -> Cover {
    let parts = parts
        .into_iter()
        .enumerate()
        .map(|(i, p)| ((i + 1).to_string(), p))
        .collect();
    Cover::new(cat.clone(), parts, None).expect("distinct labels")
}

/// Ideal cover with at most `max_parts` parts: random groups of objects,
/// each closed downward.
pub fn random_ideal_cover(cat: &Arc<FinCategory>, seed: u64, max_parts: usize) -> Cover {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x1dea);
    let groups = random_groups(&mut rng, cat.object_count(), max_parts);
    labelled(cat, groups.iter().map(|g| ideal_closure(cat, g)).collect())
}

/// Filter cover with at most `max_parts` parts.
pub fn random_filter_cover(cat: &Arc<FinCategory>, seed: u64, max_parts: usize) -> Cover {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xf117);
    let groups = random_groups(&mut rng, cat.object_count(), max_parts);
    labelled(cat, groups.iter().map(|g| filter_closure(cat, g)).collect())
}

/// Full cover by random (not necessarily closed) groups of objects. Usually
/// fails to be a cover.
pub fn random_full_family(cat: &Arc<FinCategory>, seed: u64, max_parts: usize) -> Cover {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xfa11);
    let groups = random_groups(&mut rng, cat.object_count(), max_parts);
    labelled(
        cat,
        groups.into_iter().map(|g| Subcategory::full_on(cat, g)).collect(),
    )
}

/// The category `Δ_k` of `[0], …, [k-1]` and injective order preserving
/// maps. Object `n` stands for `[n]`; a map `[m] → [n]` is named
/// `m>n:v0v1…` after its values.
pub fn simplex_category(k: usize) -> FinCategory {
    fn injections(m: usize, n: usize) -> Vec<Vec<usize>> {
        // Strictly increasing (m+1)-subsets of 0..=n.
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(len: usize, n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == len {
                out.push(cur.clone());
                return;
            }
            let start = cur.last().map_or(0, |&l| l + 1);
            for v in start..=n {
                cur.push(v);
                rec(len, n, cur, out);
                cur.pop();
            }
        }
        rec(m + 1, n, &mut cur, &mut out);
        out
    }
    let name = |m: usize, n: usize, v: &[usize]| {
        if m == n {
            format!("id_{n}")
        } else {
            let vals: String = v.iter().map(|x| x.to_string()).collect();
            format!("{m}>{n}:{vals}")
        }
    };
    let mut data = CategoryData::new(format!("Delta{k}")).objects((0..k).map(|n| n.to_string()));
    let mut maps = Vec::new();
    for m in 0..k {
        for n in (m + 1)..k {
            for v in injections(m, n) {
                data = data.morphism(name(m, n, &v), m.to_string(), n.to_string());
                maps.push((m, n, v));
            }
        }
    }
    for (l, m, inner) in &maps {
        for (m2, n, outer) in &maps {
            if m == m2 {
                let comp: Vec<usize> = inner.iter().map(|&j| outer[j]).collect();
                data = data.compose(name(*m, *n, outer), name(*l, *m, inner), name(*l, *n, &comp));
            }
        }
    }
    FinCategory::new(&data).expect("valid fixture")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover::is_cover;

    #[test]
    fn fixtures_are_valid() {
        assert_eq!(counterexample().morphism_count(), 7);
        assert!(v_poset().is_acyclic());
        assert_eq!(discrete(3).morphism_count(), 3);
        let d = simplex_category(3);
        // 1 + 3 + 1 identities plus 2 + 3 + 3 injections.
        assert_eq!(d.morphism_count(), 3 + 2 + 3 + 3);
    }

    #[test]
    fn random_families_are_covers() {
        for seed in 0..20 {
            let p = Arc::new(random_poset(seed, 8));
            assert!(p.object_count() <= 8);
            let ic = random_ideal_cover(&p, seed, 4);
            assert!(ic.len() <= 4 && ic.is_ideal_cover() && is_cover(&ic));
            let fc = random_filter_cover(&p, seed, 4);
            assert!(fc.is_filter_cover() && is_cover(&fc));
            let a = random_acyclic(seed, 5);
            assert!(a.is_acyclic());
        }
    }

    #[test]
    fn random_fixtures_are_deterministic() {
        assert_eq!(random_poset(7, 8), random_poset(7, 8));
        assert_eq!(random_acyclic(7, 5), random_acyclic(7, 5));
    }
}
