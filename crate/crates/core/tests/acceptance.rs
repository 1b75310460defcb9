//! Acceptance run: one PASS/FAIL line per criterion, each under a fixed
//! wall-clock limit. Exits non-zero if any criterion fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::Signed;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use cubeturan::constructions::{
    even_odd_layer_graph, mod3_ql_selection, mod3_selection_count, parity_q2_count,
    parity_q2_packing, ConstructionKind, ConstructionSpec, Mod3Rule,
};
use cubeturan::counting::{
    binomial, binomial_residue_sum, ceil_log2, closed_count_c2l, closed_count_qk, count_copies_qk,
    count_cycles, pow2, z_kl, z_ll_via_words, ZTable,
};
use cubeturan::cube::{apply_automorphism, StarVector, Subgraph, Vertex};
use cubeturan::search::{exact_extremal, SearchMethod, SearchOptions, SearchResult};
use cubeturan::verification::{has_k_partite_representation, is_partite_coloring, verify_free};
use cubeturan::Pattern;

type Check = std::result::Result<String, String>;

/// Number, description, time limit in seconds, check.
type Criterion = (u32, &'static str, u64, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ok<T>(r: cubeturan::Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

// 1
fn counting_formulas() -> Check {
    let mut checked = 0;
    for n in 1..=6usize {
        let cube = ok(Subgraph::full_cube(n))?;
        for k in 1..=n {
            let got = BigUint::from(ok(count_copies_qk(&cube, k))?);
            let want = ok(closed_count_qk(n as u64, k as u64))?;
            ensure(got == want, || format!("N(Q_{n}, Q_{k}): {got} != {want}"))?;
            checked += 1;
        }
    }
    let mut z = ZTable::default();
    let mut cases: Vec<(usize, usize)> = Vec::new();
    for n in 2..=5 {
        cases.extend((2..=4).map(|l| (n, l)).filter(|&(n, l)| l <= 1 << (n - 1)));
    }
    cases.extend([(4, 5), (4, 6)]);
    for (n, l) in cases {
        ok(z.ensure_for_cycles(n, l))?;
        let cube = ok(Subgraph::full_cube(n))?;
        let got = BigUint::from(ok(count_cycles(&cube, 2 * l))?);
        let want = ok(closed_count_c2l(n as u64, l as u64, &z))?;
        ensure(got == want, || format!("N(Q_{n}, C_{}): {got} != {want}", 2 * l))?;
        checked += 1;
    }
    Ok(format!("{checked} counts agree"))
}

// 2
fn stated_constants() -> Check {
    let mut z = ZTable::default();
    z.insert(3, 3, ok(z_kl(3, 3))?);
    let c6 = ok(closed_count_c2l(3, 3, &z))?;
    let q3 = ok(Subgraph::full_cube(3))?;
    let c4 = ok(count_cycles(&q3, 4))?;
    let c6_enum = ok(count_cycles(&q3, 6))?;
    ensure(c6 == BigUint::from(16u32) && c6_enum == 16, || format!("N(Q_3, C_6) = {c6}"))?;
    ensure(c4 == 6, || format!("N(Q_3, C_4) = {c4}"))?;
    ensure(z.get(3, 3) == Some(16), || format!("z(3,3) = {:?}", z.get(3, 3)))?;
    Ok("N(Q_3,C_6) = 16, N(Q_3,C_4) = 6, z(3,3) = 16".into())
}

// 3
fn z_words() -> Check {
    for l in [4usize, 5] {
        let words = ok(z_ll_via_words(l, false))?;
        let direct = ok(z_kl(l, l))?;
        ensure(words == direct as u128, || format!("l={l}: words {words} != direct {direct}"))?;
    }
    for l in 2..=6usize {
        let words = ok(z_ll_via_words(l, true))?;
        let factorial: u128 = (1..=2 * l as u128).product();
        let trivial = factorial / (4 * l as u128);
        ensure(words <= trivial, || format!("l={l}: {words} > (2l)!/(4l) = {trivial}"))?;
    }
    Ok("z(4,4) = 648 and z(5,5) = 47616 both ways; trivial bound holds for l <= 6".into())
}

fn certified(r: &SearchResult) -> std::result::Result<(), String> {
    let verdict = ok(verify_free(&r.witness, r.forbid))?;
    ensure(verdict.free, || format!("witness for {} contains {}", r.target, r.forbid))?;
    let recount = match r.target {
        Pattern::Cycle(m) => ok(count_cycles(&r.witness, m))?,
        Pattern::SubCube(k) => ok(count_copies_qk(&r.witness, k))?,
        Pattern::Edge => r.witness.len() as u64,
    };
    ensure(recount == r.value, || format!("witness recount {recount} != {}", r.value))
}

// 4
fn exact_values() -> Check {
    let exhaustive = SearchOptions {
        method: SearchMethod::Exhaustive,
        ..SearchOptions::default()
    };
    for (target, forbid, want) in [
        (Pattern::Edge, Pattern::Cycle(4), 9u64),
        (Pattern::Cycle(6), Pattern::Cycle(4), 3),
    ] {
        let bb = ok(exact_extremal(3, target, forbid, &SearchOptions::default()))?;
        let full = ok(exact_extremal(3, target, forbid, &exhaustive))?;
        ensure(bb.value == want && full.value == want, || {
            format!("ex(Q_3, {target}, {forbid}): b&b {}, exhaustive {}", bb.value, full.value)
        })?;
        certified(&bb)?;
        certified(&full)?;
        ensure(bb.witness == full.witness, || "witnesses differ".into())?;
        if target == Pattern::Cycle(6) {
            let d = bb.density();
            ensure(d == BigRational::new(3.into(), 16.into()), || format!("density {d}"))?;
        }
    }
    Ok("ex = 9 and 3, d(Q_3, C_6, C_4) = 3/16, witnesses certified".into())
}

fn certify(spec: ConstructionSpec, checks: &mut usize) -> std::result::Result<(), String> {
    let c = ok(spec.build())?;
    ensure(!c.claimed_free_of.is_empty(), || format!("{:?} claims nothing", c.spec))?;
    for &p in &c.claimed_free_of {
        let verdict = ok(verify_free(&c.graph, p))?;
        ensure(verdict.free, || format!("{} {:?} contains {p}", c.spec.kind, c.spec.params))?;
        *checks += 1;
    }
    Ok(())
}

// 5
fn constructions() -> Check {
    use ConstructionKind::*;
    let spec = ConstructionSpec::new;
    let mut checks = 0;
    for n in 3..=8 {
        certify(spec(ConderGraph).with("n", n), &mut checks)?;
        certify(spec(ParityQ2Packing).with("n", n), &mut checks)?;
    }
    for n in 2usize..=7 {
        for k in 2..=3.min(n) {
            let (a, b) = (k.div_ceil(2), (k + 2) / 2);
            for i in 0..a {
                for j in 0..b {
                    let s = spec(AksGraph).with("n", n).with("k", k).with("i", i).with("j", j);
                    certify(s, &mut checks)?;
                }
            }
            for i in 0..k {
                let s = spec(LayerComplement).with("n", n).with("k", k).with("i", i);
                certify(s, &mut checks)?;
            }
        }
        for k in 3..=4.min(n) {
            certify(spec(AksAppendixGraph).with("n", n).with("k", k), &mut checks)?;
        }
        for k in 1..=3.min(n) {
            for j in 0..k {
                let s = spec(LayerUnionMod)
                    .with("n", n)
                    .with("k", k)
                    .with("j", j)
                    .with("complement", 1);
                certify(s, &mut checks)?;
            }
        }
    }
    for n in 2..=9 {
        for j in 0..=1 {
            certify(spec(EvenOddLayers).with("n", n).with("j", j), &mut checks)?;
        }
    }
    for n in 2..=8 {
        for m in 2..=n {
            for l in 2..=(1usize << (m - 1)).min(32) {
                if ceil_log2(2 * l as u64) as usize <= m {
                    let s = spec(DisjointQmPacking).with("n", n).with("m", m).with("l", l);
                    certify(s, &mut checks)?;
                }
            }
        }
    }
    Ok(format!("{checks} freeness claims verified"))
}

// 6
fn cardinalities() -> Check {
    for n in 5..=14usize {
        let count = ok(parity_q2_count(n))?;
        // count >= (n/2) 2^(n-4)
        ensure(count.clone() * 2u32 >= BigUint::from(n) * pow2(n as u64 - 4), || {
            format!("parity count {count} at n={n}")
        })?;
        if n <= 10 {
            let listed = ok(parity_q2_packing(n))?.selected.len();
            ensure(BigUint::from(listed) == count, || format!("n={n}: listed {listed} != {count}"))?;
        }
    }
    let selected = ok(mod3_ql_selection(16, 4))?.len();
    let counted = ok(mod3_selection_count(16, 4, Mod3Rule::Standard))?;
    let floor = binomial(16, 4) * pow2(2);
    ensure(BigUint::from(selected) == counted, || format!("{selected} listed, {counted} counted"))?;
    ensure(counted >= floor, || format!("mod-3 selection {counted} < {floor}"))?;
    let mut z = ZTable::default();
    for n in 3..=7usize {
        ok(z.ensure_for_cycles(n, 3))?;
        let total = ok(closed_count_c2l(n as u64, 3, &z))?;
        let mut best = 0;
        for j in 0..=1 {
            best = best.max(ok(count_cycles(&ok(even_odd_layer_graph(n, j))?, 6))?);
        }
        ensure(BigUint::from(best) * 32u32 >= total, || {
            format!("n={n}: best layer graph has {best} C_6 of {total}")
        })?;
    }
    Ok(format!("parity n=5..14, mod-3 selection {counted} >= {floor}, layer argument n=3..7"))
}

fn ex(n: usize, target: Pattern, forbid: Pattern) -> std::result::Result<SearchResult, String> {
    let r = ok(exact_extremal(n, target, forbid, &SearchOptions::default()))?;
    certified(&r)?;
    Ok(r)
}

// 7
fn lemma_consistency() -> Check {
    let forbids = [Pattern::Cycle(4), Pattern::Cycle(6), Pattern::SubCube(3)];
    let targets = [Pattern::SubCube(2), Pattern::Cycle(4), Pattern::Cycle(6), Pattern::Cycle(8)];
    let mut pairs = 0;
    for h in forbids {
        let edge_bound = ex(3, Pattern::Edge, h)?.density();
        for t in targets {
            if t == h || (t == Pattern::SubCube(2) && h == Pattern::Cycle(4)) {
                continue;
            }
            let d = ex(3, t, h)?.density();
            ensure(d <= edge_bound, || format!("d(Q_3, {t}, {h}) = {d} > {edge_bound}"))?;
            pairs += 1;
        }
    }
    let mut steps = 0;
    for (t, h) in [
        (Pattern::Edge, Pattern::Cycle(4)),
        (Pattern::Edge, Pattern::Cycle(6)),
        (Pattern::Edge, Pattern::SubCube(3)),
        (Pattern::SubCube(2), Pattern::SubCube(3)),
    ] {
        let mut previous: Option<BigRational> = None;
        for n in 2..=4 {
            let d = ex(n, t, h)?.density();
            if let Some(p) = &previous {
                ensure(&d <= p, || format!("d(Q_n, {t}, {h}) rises to {d} at n={n}"))?;
                steps += 1;
            }
            previous = Some(d);
        }
    }
    Ok(format!("{pairs} pairs at n=3, {steps} monotone steps"))
}

fn random_subgraph(rng: &mut StdRng, n: usize, p: f64) -> Subgraph {
    Subgraph::from_predicate(n, |_| rng.gen_bool(p)).unwrap()
}

fn pattern_counts(g: &Subgraph) -> Vec<u64> {
    let mut out = vec![g.len() as u64];
    for k in 2..=3.min(g.n()) {
        out.push(count_copies_qk(g, k).unwrap());
    }
    for m in [4, 6, 8] {
        out.push(count_cycles(g, m).unwrap());
    }
    out
}

/// Closed walks of length `len` with no repeated vertex, by plain DFS.
fn self_avoiding_closed_walks(g: &Subgraph, len: usize) -> u64 {
    fn extend(g: &Subgraph, path: &mut Vec<Vertex>, len: usize) -> u64 {
        let last = *path.last().unwrap();
        if path.len() == len {
            return g.neighbors(&last).filter(|v| *v == path[0]).count() as u64;
        }
        let mut total = 0;
        for v in g.neighbors(&last).collect::<Vec<_>>() {
            if !path.contains(&v) {
                path.push(v);
                total += extend(g, path, len);
                path.pop();
            }
        }
        total
    }
    (0..1u64 << g.n())
        .map(|b| extend(g, &mut vec![Vertex::new(g.n(), b).unwrap()], len))
        .sum()
}

/// Independent `k`-partite test: every colouring of the positions, asking
/// that each edge's non-zero positions get the `k` colours once each.
fn partite_by_brute_force(edges: &[StarVector], l: usize, k: usize) -> bool {
    let total = (k as u64).pow(l as u32);
    (0..total).any(|mut code| {
        let sigma: Vec<usize> = (0..l)
            .map(|_| {
                let c = (code % k as u64) as usize;
                code /= k as u64;
                c
            })
            .collect();
        edges.iter().all(|e| {
            let support = e.star_mask() | e.ones_mask();
            let colors = (0..l)
                .filter(|p| support >> p & 1 == 1)
                .fold(0u64, |acc, p| acc | 1 << sigma[p]);
            support.count_ones() as usize == k && colors == (1 << k) - 1
        })
    })
}

// 8
fn properties() -> Check {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for round in 0..60 {
        let n = 2 + round % 4;
        let g = random_subgraph(&mut rng, n, 0.7);
        let mut perm: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            perm.swap(i, rng.gen_range(0..=i));
        }
        let flips = rng.gen_range(0..1u64 << n);
        let image = ok(apply_automorphism(&perm, flips, &g))?;
        ensure(pattern_counts(&g) == pattern_counts(&image), || {
            format!("counts change under {perm:?} / {flips:b}")
        })?;
    }
    for round in 0..60 {
        let n = 2 + round % 3;
        let g = random_subgraph(&mut rng, n, 0.8);
        if g.is_empty() {
            continue;
        }
        let e = g.edges()[rng.gen_range(0..g.len())];
        let smaller = g.without_edge(&e);
        let (before, after) = (pattern_counts(&g), pattern_counts(&smaller));
        ensure(before.iter().zip(&after).all(|(b, a)| a <= b), || {
            format!("deleting {e} raised counts {before:?} -> {after:?}")
        })?;
        for p in [Pattern::Cycle(4), Pattern::Cycle(6), Pattern::SubCube(2)] {
            if ok(verify_free(&g, p))?.free {
                ensure(ok(verify_free(&smaller, p))?.free, || format!("deleting {e} made {p}"))?;
            }
        }
    }
    for round in 0..40 {
        let n = 2 + round % 3;
        let g = random_subgraph(&mut rng, n, 0.75);
        for l in 2..=4usize.min(1 << (n - 1)) {
            let cycles = ok(count_cycles(&g, 2 * l))?;
            let walks = self_avoiding_closed_walks(&g, 2 * l);
            ensure(4 * l as u64 * cycles == walks, || {
                format!("n={n} l={l}: 4l * {cycles} != {walks}")
            })?;
        }
    }
    for m in 0..=40u64 {
        for a in 0..3 {
            let s = BigInt::from(ok(binomial_residue_sum(m, 3, a))?);
            let diff: BigInt = s * BigInt::from(3) - BigInt::from(pow2(m));
            let deviation = diff.abs();
            ensure(deviation <= BigInt::from(3), || format!("m={m} a={a}: 3 S - 2^m = {deviation}"))?;
        }
    }
    let mut partite = 0;
    for round in 0..150 {
        let l = 1 + round % 8;
        let k = 1 + rng.gen_range(0..3.min(l + 1).max(1));
        let g = random_subgraph(&mut rng, l, 0.5 / l as f64 + 0.05);
        let mut edges: Vec<StarVector> = g.edges().iter().map(|e| e.to_star_vector()).collect();
        edges.truncate(6);
        if edges.is_empty() {
            continue;
        }
        let rep = ok(has_k_partite_representation(&edges, k))?;
        let brute = partite_by_brute_force(&edges, l, k);
        ensure(rep.sigma.is_some() == brute, || format!("l={l} k={k}: checker disagrees"))?;
        if let Some(sigma) = &rep.sigma {
            ensure(is_partite_coloring(&edges, k, sigma), || "returned colouring is invalid".into())?;
        }
        partite += 1;
    }
    Ok(format!("automorphisms, deletions, walks, residues, {partite} k-partite cases"))
}

fn cli(args: &[&str], threads: &str, dir: &Path, tag: &str) -> std::result::Result<(i32, Vec<u8>), String> {
    let out = dir.join(format!("{tag}-{threads}.json"));
    let mut argv: Vec<String> = args.iter().map(|a| a.replace("{dir}", &dir.display().to_string())).collect();
    argv.extend(["--threads".into(), threads.into(), "--quiet".into()]);
    if argv[0] != "construct" {
        argv.extend(["--out".into(), out.display().to_string()]);
    }
    let status = Command::new(env!("CARGO_BIN_EXE_cubeturan"))
        .args(&argv)
        .stdout(std::process::Stdio::piped())
        .output()
        .map_err(|e| e.to_string())?;
    let code = status.status.code().unwrap_or(-1);
    let bytes = if argv[0] == "construct" {
        status.stdout
    } else {
        std::fs::read(&out).unwrap_or_default()
    };
    Ok((code, bytes))
}

// 9
fn determinism() -> Check {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let root = dir.path();
    let runs: &[(&str, &[&str], &[&str])] = &[
        ("count", &["count", "--n", "6", "--pattern", "c8"], &[]),
        ("count-enum", &["count", "--n", "5", "--pattern", "c6", "--enumerate"], &[]),
        ("zl", &["zl", "--l", "5"], &[]),
        ("zwords", &["zwords", "--l", "4", "--list"], &[]),
        ("conder", &["construct", "conder", "--n", "6", "--out", "{dir}/conder-T.cube"], &["conder-T.cube"]),
        ("parity", &["construct", "parity-q2", "--n", "7", "--out", "{dir}/parity-T.cube"], &["parity-T.cube"]),
        ("mod3", &["construct", "mod3-select", "--n", "9", "--l", "4", "--out", "{dir}/mod3-T.cube"], &["mod3-T.cube"]),
        ("cycles", &["construct", "conder-cycles", "--n", "8", "--l", "6", "--out", "{dir}/cyc-T.cube"], &["cyc-T.cube"]),
        ("packing", &["construct", "qm-packing", "--n", "7", "--m", "3", "--l", "3", "--out", "{dir}/pack-T.cube"], &["pack-T.cube"]),
        ("aks", &["construct", "aks", "--n", "7", "--k", "3", "--i", "1", "--j", "0", "--out", "{dir}/aks-T.cube"], &["aks-T.cube"]),
        ("verify-free", &["verify", "--forbid", "c6", "{dir}/conder-1.cube"], &[]),
        ("verify-hit", &["verify", "--forbid", "c8", "{dir}/conder-1.cube"], &[]),
        ("verify-q3", &["verify", "--forbid", "q3", "{dir}/aks-1.cube"], &[]),
        ("count-graph", &["count", "--pattern", "c4", "{dir}/parity-1.cube"], &[]),
        ("search", &["search", "--n", "4", "--target", "c4", "--forbid", "c6", "--witness", "{dir}/w-T.cube"], &["w-T.cube"]),
        ("search-q3", &["search", "--n", "4", "--target", "e", "--forbid", "q3", "--witness", "{dir}/wq-T.cube"], &["wq-T.cube"]),
        ("density", &["density", "--n", "3", "--target", "c6", "--forbid", "c4"], &[]),
        ("bounds", &["bounds", "--theorem", "T6", "--n", "3", "--exact"], &[]),
        ("bounds-z", &["bounds", "--theorem", "T5", "--k", "4", "--l", "6"], &[]),
        ("kpartite", &["kpartite", "--k", "2", "{dir}/kp.cube"], &[]),
    ];
    std::fs::write(root.join("kp.cube"), "cube v1 n=3\n*10\n1*1\n").map_err(|e| e.to_string())?;
    let mut compared = 0;
    for &(tag, args, files) in runs {
        let mut seen = Vec::new();
        for threads in ["1", "8", "1"] {
            let t = if threads == "8" { "8" } else { "1" };
            let args: Vec<String> = args.iter().map(|a| a.replace("-T.", &format!("-{t}."))).collect();
            let args: Vec<&str> = args.iter().map(String::as_str).collect();
            let (code, json) = cli(&args, threads, root, tag)?;
            ensure(code <= 1, || format!("{tag} exited {code}"))?;
            ensure(!json.is_empty(), || format!("{tag} wrote nothing"))?;
            let mut blobs = vec![json];
            for f in files {
                let path = root.join(f.replace("-T.", &format!("-{t}.")));
                blobs.push(std::fs::read(&path).map_err(|e| format!("{tag}: {e}"))?);
            }
            seen.push(blobs);
        }
        ensure(seen.windows(2).all(|w| w[0] == w[1]), || format!("{tag} differs across runs"))?;
        compared += 1;
    }
    Ok(format!("{compared} commands byte-identical across --threads 1, 8, 1"))
}

fn main() {
    let criteria: [Criterion; 9] = [
        (1, "counting formulas vs brute force", 60, counting_formulas),
        (2, "constants N(Q_3,C_6), N(Q_3,C_4), z(3,3)", 1, stated_constants),
        (3, "Z-word machinery", 300, z_words),
        (4, "exact extremal values at n = 3", 10, exact_values),
        (5, "construction certification", 600, constructions),
        (6, "cardinality inequalities", 300, cardinalities),
        (7, "lemma consistency", 60, lemma_consistency),
        (8, "property suites", 300, properties),
        (9, "CLI determinism across thread counts", 120, determinism),
    ];
    let mut failures = 0;
    for (id, name, limit, run) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run))
            .unwrap_or_else(|_| Err("panicked".to_string()));
        let elapsed = start.elapsed();
        let limit = Duration::from_secs(limit);
        let verdict = match outcome {
            Ok(detail) if elapsed <= limit => format!("PASS {id} {name}: {detail}"),
            Ok(detail) => format!("FAIL {id} {name}: over the time limit ({detail})"),
            Err(why) => format!("FAIL {id} {name}: {why}"),
        };
        if verdict.starts_with("FAIL") {
            failures += 1;
        }
        println!("{verdict} [{:.2} s of {} s]", elapsed.as_secs_f64(), limit.as_secs());
    }
    if failures > 0 {
        println!("{failures} criteria failed");
        std::process::exit(1);
    }
}
