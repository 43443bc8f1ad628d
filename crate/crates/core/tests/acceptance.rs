//! Acceptance gate: every criterion is checked exactly and reported on one
//! PASS/FAIL line. Exits nonzero if any criterion fails.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use proj40::constructions::{
    certify, printed_de_matrix, printed_se_matrix, rho_b, rho_c, Evenness,
};
use proj40::decoders::{represent_decode, syndrome, syndrome_decode, DecodeReport};
use proj40::oracle::{oracle_decode, OracleTable};
use proj40::projection::{has_projection_e, has_projection_o, proj};
use proj40::quaternary::{build_b10, build_e10, e10_table, orbit_census, CodeTable};
use proj40::transcript::Transcript;
use proj40::{Array4x10, BWord, CodeVariant, Gf4, QWord};

type Check = Result<String, String>;
type DecodeFn = fn(Array4x10) -> Result<DecodeReport, proj40::Error>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn weight_enumerators() -> Check {
    let want = [1, 0, 0, 0, 30, 0, 300, 0, 585, 0, 108];
    for (name, g) in [("E10", build_e10()), ("B10", build_b10())] {
        let t = CodeTable::enumerate(&g).map_err(|e| e.to_string())?;
        ensure(t.len() == 1024, || {
            format!("{name} has {} codewords", t.len())
        })?;
        ensure(*t.weight_distribution() == want, || {
            format!("{name} distribution {:?}", t.weight_distribution())
        })?;
    }
    Ok("E10 and B10: 1 + 30y^4 + 300y^6 + 585y^8 + 108y^10".into())
}

fn orbit_census_matches() -> Check {
    let counts = orbit_census().map_err(|e| e.to_string())?;
    let want = [30, 240, 60, 15, 90, 480, 48, 60];
    ensure(counts == want, || format!("census {counts:?}"))?;
    Ok(format!(
        "counts {counts:?}, total {}",
        counts.iter().sum::<usize>()
    ))
}

fn binary_certification() -> Check {
    let e10 = build_e10();
    let b = certify(&rho_b(&e10).map_err(|e| e.to_string())?);
    ensure(b.self_dual, || "rho_B not self-dual".into())?;
    ensure(b.evenness == Evenness::DoublyEven, || {
        format!("rho_B is {}", b.evenness)
    })?;
    ensure(b.min_distance == Some(8), || {
        format!("rho_B d = {:?}", b.min_distance)
    })?;
    let a = &b.weight_distribution;
    let expected = [(0, 1), (8, 285), (12, 21280), (16, 239970), (20, 525504)];
    for (w, n) in expected {
        ensure(a[w] == n && a[40 - w] == n, || {
            format!("rho_B A{w} = {}", a[w])
        })?;
    }
    ensure(b.is_symmetric() && b.size() == 1 << 20, || {
        "rho_B histogram".into()
    })?;
    let nonzero = a.iter().filter(|&&x| x > 0).count();
    ensure(nonzero == 9, || {
        format!("rho_B has {nonzero} nonzero weights")
    })?;

    let c = certify(&rho_c(&e10).map_err(|e| e.to_string())?);
    ensure(c.self_dual, || "rho_C not self-dual".into())?;
    ensure(c.evenness == Evenness::SinglyEven, || {
        format!("rho_C is {}", c.evenness)
    })?;
    ensure(c.min_distance == Some(8), || {
        format!("rho_C d = {:?}", c.min_distance)
    })?;
    let a = &c.weight_distribution;
    ensure(a[8] == 285 && a[10] == 1024, || {
        format!("rho_C A8 = {}, A10 = {}", a[8], a[10])
    })?;
    Ok("rho_B: doubly-even, d=8, A8..A20 = 285/21280/239970/525504; rho_C: singly-even, d=8, A10=1024".into())
}

fn span_equality() -> Check {
    let b = rho_b(&build_e10()).map_err(|e| e.to_string())?;
    let p = printed_de_matrix();
    for (i, r) in b.rows().iter().enumerate() {
        ensure(p.spans(*r), || {
            format!("rho_B row {} not in printed span", i + 1)
        })?;
    }
    for (i, r) in p.rows().iter().enumerate() {
        ensure(b.spans(*r), || {
            format!("printed row {} not in rho_B span", i + 1)
        })?;
    }
    Ok("all 40 rows cross-member".into())
}

struct Example {
    name: &'static str,
    rows: &'static str,
    corrected: &'static str,
    repr: &'static str,
    synd: &'static str,
}

const EXAMPLES: [Example; 4] = [
    Example {
        name: "case1",
        rows: "0110111110\n1001000010\n0011100101\n0011100110",
        corrected: "10101001Ww",
        repr: include_str!("../fixtures/transcripts/case1_repr.txt"),
        synd: include_str!("../fixtures/transcripts/case1_synd.txt"),
    },
    Example {
        name: "case2",
        rows: "1011101110\n0110000010\n1111111000\n1101001011",
        corrected: "10WwWw10wW",
        repr: include_str!("../fixtures/transcripts/case2_repr.txt"),
        synd: include_str!("../fixtures/transcripts/case2_synd.txt"),
    },
    Example {
        name: "case3",
        rows: "1110011110\n1110100001\n0010011101\n1101101101",
        corrected: "wwWW001100",
        repr: include_str!("../fixtures/transcripts/case3_repr.txt"),
        synd: include_str!("../fixtures/transcripts/case3_synd.txt"),
    },
    Example {
        name: "case4",
        rows: "1111111111\n1011111111\n1110010101\n0001011010",
        corrected: "WwWwwWwWwW",
        repr: include_str!("../fixtures/transcripts/case4_repr.txt"),
        synd: include_str!("../fixtures/transcripts/case4_synd.txt"),
    },
];

fn golden_examples() -> Check {
    for ex in &EXAMPLES {
        let v: Array4x10 = ex.rows.parse().map_err(|e| format!("{e}"))?;
        let want: QWord = ex.corrected.parse().map_err(|e| format!("{e}"))?;
        let runs: [(&str, DecodeFn, &str); 2] = [
            ("repr", represent_decode, ex.repr),
            ("synd", syndrome_decode, ex.synd),
        ];
        for (alg, decode, golden) in runs {
            let report = decode(v).map_err(|e| e.to_string())?;
            ensure(report.outcome.corrected_projection() == Some(want), || {
                format!(
                    "{} {alg}: y' = {:?}",
                    ex.name,
                    report.outcome.corrected_projection()
                )
            })?;
            let c = report.outcome.codeword().unwrap();
            ensure(proj(Array4x10::new(c)) == want, || {
                format!("{} {alg}: lift", ex.name)
            })?;
            let text = Transcript::new(alg, CodeVariant::DoublyEven, report).render_verbose();
            ensure(text == golden, || {
                format!("{} {alg}: transcript differs", ex.name)
            })?;
        }
    }
    Ok("4 examples x 2 algorithms, projections and transcripts exact".into())
}

fn error_patterns() -> Vec<BWord> {
    let mut out = vec![BWord::ZERO];
    for a in 1..=40 {
        out.push(BWord::ZERO.flip(a));
        for b in a + 1..=40 {
            out.push(BWord::ZERO.flip(a).flip(b));
            for c in b + 1..=40 {
                out.push(BWord::ZERO.flip(a).flip(b).flip(c));
            }
        }
    }
    out
}

fn bounded_distance_completeness() -> Check {
    let codewords = std::env::var("ACCEPTANCE_CODEWORDS")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(1000usize);
    let g = printed_de_matrix();
    let patterns = error_patterns();
    ensure(patterns.len() == 10_701, || {
        format!("{} patterns", patterns.len())
    })?;
    let mut rng = ChaCha8Rng::seed_from_u64(0x40_20_08);
    let mut trials = 0u64;
    for _ in 0..codewords {
        let c = g
            .encode(rng.gen_range(0..1 << 20))
            .map_err(|e| e.to_string())?;
        for &e in &patterns {
            let v = Array4x10::new(c ^ e);
            for (alg, r) in [("repr", represent_decode(v)), ("synd", syndrome_decode(v))] {
                let got = r.map_err(|err| format!("{alg} on {}: {err}", c ^ e))?;
                ensure(got.outcome.codeword() == Some(c), || {
                    format!(
                        "{alg} failed on codeword {} error {:?}",
                        c.to_hex(),
                        e.support()
                    )
                })?;
            }
            trials += 1;
        }
    }
    Ok(format!(
        "{codewords} codewords x 10701 patterns = {trials} words, all recovered by both"
    ))
}

fn oracle_agreement() -> Check {
    let t = OracleTable::for_variant(CodeVariant::DoublyEven);
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let (mut corrected, mut failed) = (0u64, 0u64);
    for _ in 0..1_000_000 {
        let v = BWord::from_u64(rng.gen::<u64>() & ((1 << 40) - 1));
        let a = Array4x10::new(v);
        let r = represent_decode(a)
            .map_err(|e| e.to_string())?
            .outcome
            .codeword();
        let s = syndrome_decode(a)
            .map_err(|e| e.to_string())?
            .outcome
            .codeword();
        let o = oracle_decode(v, t, 3);
        ensure(r == o && s == o, || {
            format!("{v}: repr {r:?} synd {s:?} oracle {o:?}")
        })?;
        if o.is_some() {
            corrected += 1;
        } else {
            failed += 1;
        }
    }
    Ok(format!(
        "10^6 words: {corrected} decoded, {failed} failures, identical verdicts"
    ))
}

fn syndrome_characterization() -> Check {
    let code = e10_table();
    let zero = [Gf4::ZERO; 5];
    let mut zeros = 0;
    for packed in 0..1u32 << 20 {
        let y = QWord::from_packed(packed);
        let is_zero = syndrome(y) == zero;
        ensure(is_zero == code.contains(y), || {
            format!("{y}: syndrome zero = {is_zero}")
        })?;
        zeros += is_zero as u32;
    }
    ensure(zeros == 1024, || format!("{zeros} zero syndromes"))?;
    Ok("4^10 words, zero syndrome exactly on the 1024 codewords".into())
}

fn projection_properties() -> Check {
    let code = e10_table();
    let g = printed_de_matrix();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..10_000 {
        let a = g.encode(rng.gen_range(0..1 << 20)).unwrap();
        let b = g.encode(rng.gen_range(0..1 << 20)).unwrap();
        let lhs = proj(Array4x10::new(a ^ b));
        let rhs = proj(Array4x10::new(a)) + proj(Array4x10::new(b));
        ensure(lhs == rhs, || format!("proj not additive on {a}, {b}"))?;
    }
    for r in printed_de_matrix().rows() {
        ensure(has_projection_o(*r, code), || {
            format!("DE row {r} lacks projection O")
        })?;
    }
    for r in printed_se_matrix().rows() {
        ensure(has_projection_e(*r, code), || {
            format!("SE row {r} lacks projection E")
        })?;
    }
    Ok("10^4 pairs additive; DE rows projection O, SE rows projection E".into())
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("weight enumerators of E10/B10", weight_enumerators),
        ("orbit type census", orbit_census_matches),
        ("binary certification", binary_certification),
        ("span equality", span_equality),
        ("golden examples", golden_examples),
        (
            "bounded-distance completeness",
            bounded_distance_completeness,
        ),
        ("oracle agreement", oracle_agreement),
        ("syndrome characterization", syndrome_characterization),
        (
            "proj linearity and projection membership",
            projection_properties,
        ),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("PASS criterion {} ({name}) [{secs:.1}s]: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {} ({name}) [{secs:.1}s]: {detail}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
