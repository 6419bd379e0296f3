//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each and
//! exits non-zero if any criterion fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use rrcode::analysis::{
    capacity_1d_lq, capacity_1d_rr, error_prop, level_probs, make_tables, rate_1d_rr, rate_2d_rr,
    symbol_probs,
};
use rrcode::bits::{complement, zero_gap_zero_windows};
use rrcode::experiment::{run_stats, ExperimentConfig};
use rrcode::loco::{cardinality, message_length};
use rrcode::rll::rll_count;
use rrcode::rr::{data_len_2d, encode_1d, encode_2d, line_capacity};
use rrcode::{Direction, GrayMap, LocoCode, PatternSet, RllCode, Scheme};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within_time(start: Instant, limit: Duration) -> Result<(), String> {
    let took = start.elapsed();
    ensure(took < limit, || format!("took {took:?}, limit {limit:?}"))
}

/// Bits of `x` as an `m`-bit word, most significant first.
fn word(x: u32, m: usize) -> Vec<bool> {
    (0..m).rev().map(|k| x >> k & 1 == 1).collect()
}

fn avoids_000_010(w: &[bool]) -> bool {
    w.windows(3).all(|t| t[0] || t[2])
}

/// All `m`-bit words avoiding `000` and `010`, in lexicographic order.
fn brute_force_codewords(m: usize) -> Vec<Vec<bool>> {
    (0..1u32 << m)
        .map(|x| word(x, m))
        .filter(|w| avoids_000_010(w))
        .collect()
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    for m in 2..=21 {
        let count = (0..1u32 << m)
            .filter(|&x| {
                // bit k and bit k+2 both zero marks 000 or 010
                let zeros = !x & ((1u32 << m) - 1);
                zeros & (zeros >> 2) == 0
            })
            .count();
        ensure(BigUint::from(count) == cardinality(m), || {
            format!("m={m}: brute force {count}, cardinality {}", cardinality(m))
        })?;
    }
    for (m, n, s) in [(7, 40u32, 5), (11, 273, 8), (21, 33552, 15)] {
        ensure(cardinality(m) == BigUint::from(n), || {
            format!("N({m}) != {n}")
        })?;
        let got = message_length(m).map_err(|e| e.to_string())?;
        ensure(got == s, || format!("s({m}) = {got}, expected {s}"))?;
    }
    within_time(start, Duration::from_secs(30))?;
    Ok("N(m) matches enumeration for m=2..21; N(7,11,21)=40/273/33552, s=5/8/15".into())
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    for m in 2..=15 {
        let code = LocoCode::new(m).map_err(|e| e.to_string())?;
        let list = brute_force_codewords(m);
        for (g, expected) in list.iter().enumerate() {
            let g = BigUint::from(g);
            let got = code.unrank(&g).map_err(|e| e.to_string())?;
            ensure(&got == expected, || format!("m={m}: unrank({g}) mismatch"))?;
            let back = code.rank(expected).map_err(|e| e.to_string())?;
            ensure(back == g, || format!("m={m}: rank mismatch at {g}"))?;
        }
        ensure(code.unrank(&BigUint::from(list.len())).is_err(), || {
            format!("m={m}: index N(m) accepted")
        })?;
    }
    within_time(start, Duration::from_secs(10))?;
    Ok("encode/decode agree with sorted enumeration for m=2..15".into())
}

fn criterion_3() -> Outcome {
    for m in 2..=12 {
        let code = LocoCode::new(m).map_err(|e| e.to_string())?;
        let top = cardinality(m) - 1u32;
        for c in brute_force_codewords(m) {
            let g = code.rank(&c).map_err(|e| e.to_string())?;
            let ga = code.asym_rank(&complement(&c)).map_err(|e| e.to_string())?;
            ensure(g + ga == top, || format!("m={m}: duality fails"))?;
        }
    }
    Ok("g_asym(complement(c)) + g(c) = N(m)-1 for m=2..12".into())
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let printed = [
        (4u32, 0.8941, 0.8471, 5.257),
        (8, 0.9235, 0.8981, 2.750),
        (16, 0.9401, 0.9235, 1.766),
    ];
    let tables = make_tables().map_err(|e| e.to_string())?;
    let mut failures = Vec::new();
    for (q, lq, rr, gap) in printed {
        let c_lq = capacity_1d_lq(q).map_err(|e| e.to_string())?;
        let c_rr = capacity_1d_rr(q as u64).map_err(|e| e.to_string())?;
        let row = tables
            .capacity
            .iter()
            .find(|r| r.q == q)
            .ok_or("missing row")?;
        if (c_lq - lq).abs() > 5e-4 {
            failures.push(format!("q={q} C1D_Lq {c_lq:.5} vs {lq}"));
        }
        if (c_rr - rr).abs() > 5e-4 {
            failures.push(format!("q={q} C1D_RR {c_rr:.5} vs {rr}"));
        }
        if (row.gap_percent - gap).abs() > 5e-3 {
            failures.push(format!("q={q} gap {:.3}% vs {gap}%", row.gap_percent));
        }
    }
    within_time(start, Duration::from_secs(5))?;
    if failures.is_empty() {
        Ok("capacities within 5e-4, gaps within 5e-3".into())
    } else {
        Err(failures.join("; "))
    }
}

fn criterion_5() -> Outcome {
    let printed: [(u64, usize, f64, f64, usize, f64); 9] = [
        (4, 7, 0.7500, 0.7778, 5, 1.750),
        (4, 11, 0.7500, 0.8077, 8, 2.500),
        (4, 21, 0.7500, 0.8261, 15, 4.250),
        (8, 7, 0.8333, 0.8519, 5, 1.500),
        (8, 11, 0.8333, 0.8718, 8, 2.000),
        (8, 21, 0.8333, 0.8841, 15, 3.167),
        (16, 7, 0.8750, 0.8889, 5, 1.375),
        (16, 11, 0.8750, 0.9038, 8, 1.750),
        (16, 21, 0.8750, 0.9130, 15, 2.625),
    ];
    for (q, m, r2, r1, s, e1) in printed {
        let got_r2 = rate_2d_rr(q).map_err(|e| e.to_string())?;
        let got_r1 = rate_1d_rr(q, m).map_err(|e| e.to_string())?;
        let got_s = message_length(m).map_err(|e| e.to_string())?;
        let (got_e1, got_e2) = error_prop(q, m).map_err(|e| e.to_string())?;
        ensure((got_r2 - r2).abs() <= 5e-5, || {
            format!("q={q} R2D {got_r2} vs {r2}")
        })?;
        ensure((got_r1 - r1).abs() <= 5e-5, || {
            format!("q={q} m={m} R1D {got_r1} vs {r1}")
        })?;
        ensure(got_s == s, || format!("m={m} s {got_s} vs {s}"))?;
        ensure((got_e2 - 1.0).abs() <= 5e-4, || format!("E2D {got_e2}"))?;
        ensure((got_e1 - e1).abs() <= 5e-4, || {
            format!("q={q} m={m} E1D {got_e1} vs {e1}")
        })?;
    }
    Ok("all 9 rows match".into())
}

fn criterion_6() -> Outcome {
    let map = GrayMap::new(8).map_err(|e| e.to_string())?;
    let expected = ["111", "110", "100", "101", "001", "000", "010", "011"];
    for (level, bits) in expected.iter().enumerate() {
        let got = map.label_string(level as u8);
        ensure(got == *bits, || {
            format!("q=8 level {level}: {got} vs {bits}")
        })?;
    }
    for q in [2u32, 4, 8, 16, 32] {
        let map = GrayMap::new(q).map_err(|e| e.to_string())?;
        let mut seen = vec![false; q as usize];
        for level in 0..q {
            let label = map.label(level as u8);
            ensure(!std::mem::replace(&mut seen[label as usize], true), || {
                format!("q={q}: label {label} repeated")
            })?;
            if level + 1 < q {
                let next = map.label(level as u8 + 1);
                ensure((label ^ next).count_ones() == 1, || {
                    format!(
                        "q={q}: levels {level},{} differ in more than one bit",
                        level + 1
                    )
                })?;
            }
            let msb = map.page_bit(level as u8, map.msb_page());
            ensure(msb == (level < q / 2), || {
                format!("q={q}: MSB rule fails at {level}")
            })?;
        }
    }
    Ok("q=8 table exact; Gray and MSB rules hold for q=2..32".into())
}

fn criterion_7() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let ms = [7usize, 11, 21];
    let codes: Vec<LocoCode> = ms.iter().map(|&m| LocoCode::new(m).unwrap()).collect();
    for q in [4u32, 8, 16] {
        let map = GrayMap::new(q).map_err(|e| e.to_string())?;
        let forbidden = PatternSet::forbidden(q).map_err(|e| e.to_string())?;
        for i in 0..10_000 {
            let code = &codes[i % codes.len()];
            let cols = code.block_length() * rng.random_range(1..=6);
            let msb_len = line_capacity(code, cols).map_err(|e| e.to_string())?;
            let msb: Vec<bool> = (0..msb_len).map(|_| rng.random()).collect();
            let other: Vec<bool> = (0..cols * (map.pages() - 1))
                .map(|_| rng.random())
                .collect();
            let line = encode_1d(&msb, &other, &map, code, cols).map_err(|e| e.to_string())?;
            let hits = forbidden.scan_sequence(&line).map_err(|e| e.to_string())?;
            ensure(hits.is_empty(), || {
                format!("q={q} wordline {i}: violations at {hits:?}")
            })?;
        }
    }
    for g in 0..100 {
        let q = [4u32, 8, 16][g % 3];
        let map = GrayMap::new(q).map_err(|e| e.to_string())?;
        let rows = rng.random_range(1..=64);
        let cols = rng.random_range(1..=64);
        let data: Vec<bool> = (0..data_len_2d(&map, rows, cols))
            .map(|_| rng.random())
            .collect();
        let grid = encode_2d(&data, &map, rows, cols).map_err(|e| e.to_string())?;
        let report = PatternSet::forbidden(q)
            .and_then(|p| p.scan_grid(&grid, Direction::Both))
            .map_err(|e| e.to_string())?;
        ensure(report.is_clean(), || {
            format!("rr2d grid {g} ({rows}x{cols}, q={q}): {:?}", report.counts)
        })?;
    }
    within_time(start, Duration::from_secs(60))?;
    Ok("3x10^4 rr1d wordlines and 100 rr2d grids are violation-free".into())
}

fn criterion_8() -> Outcome {
    ensure(rll_count(18) == 6765, || {
        format!("F(18) = {}", rll_count(18))
    })?;
    ensure(rll_count(17) == 4181 && rll_count(17) >= 4096, || {
        format!("F(17) = {}", rll_count(17))
    })?;
    for n in 1..=20usize {
        let brute = (0..1u32 << n)
            .filter(|&x| {
                let zeros = !x & ((1u32 << n) - 1);
                zeros & (zeros >> 1) == 0
            })
            .count() as u64;
        ensure(brute == rll_count(n), || {
            format!("n={n}: brute {brute} vs {}", rll_count(n))
        })?;
    }
    let code = RllCode::default();
    for msg in 0..4096u64 {
        let w = code.encode_block(msg).map_err(|e| e.to_string())?;
        let back = code.decode_block(&w).map_err(|e| e.to_string())?;
        ensure(back == msg, || format!("message {msg} decodes to {back}"))?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut stream = Vec::new();
    for _ in 0..1000 {
        let msg = rng.random_range(0..1u64 << 24);
        stream.extend(code.interleave_encode(msg).map_err(|e| e.to_string())?);
    }
    let bad = zero_gap_zero_windows(&stream);
    ensure(bad.is_empty(), || {
        format!("{} forbidden windows, first at {}", bad.len(), bad[0])
    })?;
    Ok("F(17)=4181, F(18)=6765; 4096-message round trip; 1000 interleaved words clean".into())
}

fn criterion_9() -> Outcome {
    let target = 1.0 / ((1.0 + 5f64.sqrt()) / 2.0 + 2.0);
    let (p0, p1) = symbol_probs();
    ensure(
        (p0 - 0.2764).abs() <= 1e-4 && (p0 - target).abs() <= 1e-12,
        || format!("p0 = {p0}"),
    )?;
    ensure(
        (p1 - 0.7236).abs() <= 1e-4 && (p1 - (1.0 - target)).abs() <= 1e-12,
        || format!("p1 = {p1}"),
    )?;
    let levels = level_probs(8).map_err(|e| e.to_string())?;
    for (l, p) in levels.iter().enumerate() {
        let want = if l >= 4 { 0.0691 } else { 0.1809 };
        ensure((p - want).abs() <= 1e-4, || {
            format!("level {l}: {p} vs {want}")
        })?;
    }
    let code = LocoCode::new(21).map_err(|e| e.to_string())?;
    let messages = 100_000;
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let data: Vec<bool> = (0..messages * code.message_length())
        .map(|_| rng.random())
        .collect();
    let page = code.encode_stream(&data);
    let zeros = page.iter().filter(|&&b| !b).count() as f64 / page.len() as f64;
    ensure((zeros - 0.2764).abs() <= 0.05, || {
        format!("empirical p0 {zeros:.4}")
    })?;
    Ok(format!(
        "p0={p0:.4}, level probs 0.0691/0.1809, empirical p0 {zeros:.4}"
    ))
}

fn criterion_10() -> Outcome {
    let rate = rate_1d_rr(8, 21).map_err(|e| e.to_string())?;
    let vs_rr = rate / capacity_1d_rr(8).map_err(|e| e.to_string())?;
    let vs_lq = rate / capacity_1d_lq(8).map_err(|e| e.to_string())?;
    ensure(vs_rr >= 0.98, || format!("R/C_RR = {vs_rr:.4}"))?;
    ensure(vs_lq >= 0.955, || format!("R/C_Lq = {vs_lq:.4}"))?;
    Ok(format!("R/C_RR = {vs_rr:.4}, R/C_Lq = {vs_lq:.4}"))
}

fn criterion_11() -> Outcome {
    let config = ExperimentConfig {
        q: 8,
        m: 21,
        rows: 64,
        cols: 92,
        scheme: Scheme::Rr1dWordline,
        seed: 11,
    };
    let a = run_stats(config).map_err(|e| e.to_string())?.to_json();
    let b = run_stats(config).map_err(|e| e.to_string())?.to_json();
    ensure(a == b, || "library stats differ between runs".into())?;

    let run = || {
        Command::new(env!("CARGO_BIN_EXE_rrcode"))
            .args([
                "stats", "--q", "8", "--m", "21", "--rows", "64", "--cols", "92",
            ])
            .args(["--scheme", "rr1d-wordline", "--seed", "11"])
            .output()
            .map_err(|e| e.to_string())
    };
    let (x, y) = (run()?, run()?);
    ensure(x.status.success(), || {
        String::from_utf8_lossy(&x.stderr).into_owned()
    })?;
    ensure(x.stdout == y.stdout && !x.stdout.is_empty(), || {
        "CLI stats output differs".into()
    })?;
    Ok("stats JSON byte-identical across runs (library and CLI)".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("cardinality", criterion_1),
        ("codec bijection", criterion_2),
        ("asymmetric duality", criterion_3),
        ("capacity table", criterion_4),
        ("rate table", criterion_5),
        ("gray mapping", criterion_6),
        ("constraint elimination", criterion_7),
        ("rll code", criterion_8),
        ("probabilities", criterion_9),
        ("rate vs capacity", criterion_10),
        ("determinism", criterion_11),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let took = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} {name}: PASS ({took:.2}s) {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} {name}: FAIL ({took:.2}s) {detail}", i + 1);
            }
        }
    }
    println!("{} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
