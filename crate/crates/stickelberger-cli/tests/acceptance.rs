//! Acceptance gate: one test per shipped guarantee, each ending in a single
//! `criterion N (...): pass` line. Run with `--nocapture` to see them; a
//! failing criterion fails its test with the offending datum in the message.

use std::collections::BTreeMap;
use std::process::Command;

use num_bigint::BigInt;
use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;

use stickelberger::arith::{self, rat_int, Rat};
use stickelberger::cyclotomic::{
    bs_element, euler_phi, jacobi_sum, norm_relation_check, tower_norm_check, verify_bs,
    ResidueCharacter,
};
use stickelberger::groupring::{units_mod, AbelianGaloisGroup, GroupRingElement};
use stickelberger::iwasawa::{check_b, cyclicity_probe, CyclicVerdict, SearchBounds};
use stickelberger::kshadow::{div_order, gamma_l, index_formula, restriction_gamma_check};
use stickelberger::theta::{dr_congruence_check, integrality_check, minus_part_check, theta};

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_stickelberger")
}

fn run_cli(args: &[&str]) -> (i32, String) {
    let out = Command::new(bin()).args(args).output().expect("spawning the CLI");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).expect("utf-8 output"),
    )
}

fn smallest_coprime_b(to: u64) -> u64 {
    (2..).find(|b| b.gcd(&to) == 1).unwrap()
}

const ODD_PRIMES_UNDER_160: [u64; 36] = [
    3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
    101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157,
];

#[test]
fn criterion_01_golden_theta() {
    let g = AbelianGaloisGroup::full(5).unwrap();
    let t = theta(0, 3, 3, 5, &g).unwrap();
    let mut expected = GroupRingElement::zero(&g);
    expected.add_rat_term(3, rat_int(1)).unwrap();
    expected.add_rat_term(2, rat_int(-1)).unwrap();
    assert_eq!(t.element, expected, "Theta_0(3, 5) != sigma_3 - sigma_2");

    // b = 2 shares a factor with the roots of unity of Q(mu_5): the
    // coefficients acquire 2-adic denominators but stay 5-integral
    let t2 = theta(0, 2, 2, 5, &g).unwrap();
    assert!(
        t2.element.non_integral_witness(2).is_some(),
        "Theta_0(2, 5) unexpectedly 2-integral"
    );
    assert!(
        t2.element.non_integral_witness(5).is_none(),
        "Theta_0(2, 5) not 5-integral"
    );
    for &s in g.elements() {
        assert_eq!(t2.element.rat_coeff(s).denom(), &BigInt::from(2));
    }
    println!("criterion 1 (golden Stickelberger values over Q(mu_5)): pass");
}

#[test]
fn criterion_02_deligne_ribet_suite() {
    let mut checked = 0;
    for fprime in [5u64, 7, 9, 11, 15, 25] {
        let g = AbelianGaloisGroup::full(fprime).unwrap();
        for n in [1u64, 3, 5, 7, 9] {
            for l in [3u64, 5, 7] {
                let b = smallest_coprime_b(l * fprime);
                let t = theta(n, b, b, fprime, &g).unwrap();
                let integral = integrality_check(&t, l).unwrap();
                assert!(
                    integral.integral,
                    "Theta_{n}({b}, {fprime}) not {l}-integral at sigma_{:?}",
                    integral.witness
                );
                let v = dr_congruence_check(b, fprime, n, l, &g).unwrap();
                assert!(
                    v.holds,
                    "congruence fails at (f', n, l, b) = ({fprime}, {n}, {l}, {b}), \
                     modulus {}",
                    v.modulus
                );
                checked += 1;
            }
        }
    }
    assert_eq!(checked, 90);
    println!("criterion 2 (Deligne-Ribet congruence suite, {checked} cases): pass");
}

#[test]
fn criterion_03_minus_part() {
    let mut checked = 0;
    for m in [3u64, 4, 5, 7, 8, 9, 11, 12, 13, 15, 16, 20] {
        let g = AbelianGaloisGroup::full(m).unwrap();
        assert!(g.is_cm(), "Q(mu_{m}) should be CM");
        // b odd and coprime to m keeps Theta_0 in Z[G]
        let b = (3..).step_by(2).find(|b| b.gcd(&m) == 1).unwrap();
        let t = theta(0, b, b, m, &g).unwrap();
        assert!(
            minus_part_check(&t).unwrap(),
            "Theta_0({b}, {m}) is not in (1 - j) Z[G]"
        );
        checked += 1;
    }
    println!("criterion 3 (minus-part membership over {checked} CM fields): pass");
}

#[test]
fn criterion_04_brumer_stark_divisors() {
    let mut checked = 0;
    for m in [3u64, 4, 5, 7] {
        for p in (m + 1..200).step_by(m as usize) {
            if !arith::is_prime(p) {
                continue;
            }
            let chi = ResidueCharacter::new(m, p).unwrap();
            let b = smallest_coprime_b(m * p);
            let lambda = bs_element(b, &chi).unwrap();
            let verdict = verify_bs(&lambda).unwrap();
            assert!(
                verdict.holds,
                "div(lambda) != Theta_0 * w at (m, p, b) = ({m}, {p}, {b}): \
                 doubled difference {:?}",
                verdict.difference.terms()
            );
            // every Jacobi sum in the product has the full norm
            let expected_norm = BigInt::from(p).pow(euler_phi(m) as u32 / 2);
            for i in 1..b {
                let j = jacobi_sum(&chi, 1, i).unwrap();
                assert_eq!(
                    j.norm().unwrap(),
                    expected_norm,
                    "N(J(chi, chi^{i})) != p^(phi/2) at (m, p) = ({m}, {p})"
                );
            }
            checked += 1;
        }
    }
    assert!(checked >= 55, "expected the full prime grid, got {checked}");
    println!("criterion 4 (Brumer-Stark divisor identity, {checked} primes): pass");
}

#[test]
fn criterion_05_norm_relation() {
    for p in [71u64, 211, 281] {
        let rep = norm_relation_check(3, 5, 7, p).unwrap();
        assert!(rep.element_ok, "element-level norm relation fails at p = {p}");
        assert!(rep.divisor_ok, "divisor-level norm relation fails at p = {p}");
    }
    // twisted exponent algebra above n = 0
    for n in [1u64, 2] {
        assert!(
            tower_norm_check(3, 5, 7, n, 71).unwrap(),
            "tower exponent algebra fails at n = {n}"
        );
    }
    println!("criterion 5 (Euler-system norm relation at 71, 211, 281): pass");
}

#[test]
fn criterion_06_restriction_gamma() {
    let mut checked = 0;
    for f in [1u64, 5] {
        for l in [3u64, 7] {
            for k in [1u32, 2] {
                for n in 0..=5u64 {
                    let b = 2u64;
                    if n == 0 {
                        // the Euler factor 1 - sigma_l^{-1} is not a unit, so
                        // only the exact Q[G_F] identity is available
                        assert!(
                            exact_restriction(n, b, f, l),
                            "exact restriction fails at (f, l, n) = ({f}, {l}, {n})"
                        );
                    } else {
                        assert!(
                            restriction_gamma_check(n, b, f, l, k).unwrap(),
                            "restriction/gamma fails at (f, l, k, n) = ({f}, {l}, {k}, {n})"
                        );
                        let g_f = group_for(f, l, k);
                        let cert = gamma_l(n, f, l, &g_f, k).unwrap();
                        assert!(
                            cert.certified,
                            "gamma_{l} inverse certificate fails at (f, k, n) = ({f}, {k}, {n})"
                        );
                    }
                    checked += 1;
                }
            }
        }
    }
    assert_eq!(checked, 48);
    println!("criterion 6 (restriction/gamma identity on {checked} grid points): pass");
}

fn group_for(f: u64, l: u64, k: u32) -> AbelianGaloisGroup {
    if f <= 2 {
        let lk = l.pow(k);
        AbelianGaloisGroup::fixed_field_of(lk, &units_mod(lk)).unwrap()
    } else {
        AbelianGaloisGroup::full(f).unwrap()
    }
}

/// `Res_{E/F}(Theta_n(b, f l)) = Theta_n(b, f) (1 - l^n sigma_l^{-1})`,
/// exactly in `Q[G_F]`, for `E = Q(mu_{lcm(f, l)})`.
fn exact_restriction(n: u64, b: u64, f: u64, l: u64) -> bool {
    let m_e = f.lcm(&l);
    let g_e = AbelianGaloisGroup::full(m_e).unwrap();
    let g_f = if f <= 2 {
        AbelianGaloisGroup::fixed_field_of(m_e, &units_mod(m_e)).unwrap()
    } else {
        AbelianGaloisGroup::full(f).unwrap()
    };
    let lhs = theta(n, b, b, f * l, &g_e).unwrap().element.restrict(&g_f).unwrap();
    let sigma_l_inv = g_f.inv(g_f.class_of_ideal(l).unwrap()).unwrap();
    let euler = GroupRingElement::one(&g_f)
        .sub(
            &GroupRingElement::sigma(&g_f, sigma_l_inv)
                .unwrap()
                .scale_rat(&Rat::from_integer(BigInt::from(l).pow(n as u32)))
                .unwrap(),
        )
        .unwrap();
    let rhs = theta(n, b, b, f, &g_f).unwrap().element.grmul(&euler).unwrap();
    lhs == rhs
}

#[test]
fn criterion_07_k_order_formulas() {
    for n in 1..=10u64 {
        for l in [3u64, 5, 7, 11] {
            // index_formula returns an error unless the ratio is exactly 1
            assert!(
                index_formula(n, l).unwrap().is_one(),
                "index formula != 1 at (n, l) = ({n}, {l})"
            );
        }
    }
    for l in [3u64, 5, 7, 11, 13, 17, 19, 23, 29, 31] {
        for n in (1..l - 1).step_by(2) {
            let d = div_order(n, l).unwrap();
            assert!(
                d.order.is_one(),
                "|D({n})_{l}| = {} at a regular prime",
                d.order
            );
        }
    }
    let d = div_order(31, 37).unwrap();
    assert_eq!(d.order, BigUint::from(37u64), "|D(31)_37| != 37");
    assert!(d.hypothesis_ok);
    println!("criterion 7 (K-order formulas: index 1, |D(n)_l| grid, |D(31)_37| = 37): pass");
}

#[test]
fn criterion_08_eigenspace_orders() {
    // (l, i = l - k) for the nine known irregular pairs (l, k) with l < 160
    let irregular: BTreeMap<u64, Vec<(u64, u64)>> = [
        (37u64, vec![(5u64, 37u64)]),
        (59, vec![(15, 59)]),
        (67, vec![(9, 67)]),
        (101, vec![(33, 101)]),
        (103, vec![(79, 103)]),
        (131, vec![(109, 131)]),
        (149, vec![(19, 149)]),
        (157, vec![(47, 157), (95, 157)]),
    ]
    .into();
    // the scan runs every odd eigenspace with the Bernoulli-numerator
    // cross-oracle enforced internally; a disagreement aborts the scan
    let (code, out) = run_cli(&[
        "--format", "csv", "--jobs", "4", "scan", "--l-min", "3", "--l-max", "157",
    ]);
    assert_eq!(code, 0, "scan failed:\n{out}");
    let mut seen = BTreeMap::new();
    for line in out.lines() {
        let mut cols = line.splitn(4, ',');
        let l: u64 = cols.next().unwrap().parse().unwrap();
        let _b = cols.next().unwrap();
        let count: usize = cols.next().unwrap().parse().unwrap();
        let pairs: Vec<(u64, u64)> = cols
            .next()
            .unwrap()
            .split(';')
            .filter(|s| !s.is_empty())
            .map(|s| {
                let (i, o) = s.split_once(':').unwrap();
                (i.parse().unwrap(), o.parse().unwrap())
            })
            .collect();
        assert_eq!(count, pairs.len());
        seen.insert(l, pairs);
    }
    assert_eq!(
        seen.keys().copied().collect::<Vec<_>>(),
        ODD_PRIMES_UNDER_160,
        "scan skipped a prime"
    );
    for (l, pairs) in &seen {
        let expected = irregular.get(l).cloned().unwrap_or_default();
        assert_eq!(
            pairs, &expected,
            "nontrivial eigenspaces at l = {l}: got {pairs:?}, expected {expected:?}"
        );
    }
    println!(
        "criterion 8 (Mazur-Wiles eigenspace orders for all odd characters, l < 160): pass"
    );
}

#[test]
fn criterion_09_cyclicity_probe() {
    let b = check_b(5, 37).unwrap();
    let bounds = SearchBounds {
        p_bound: 100_000,
        q_bound: 2_000_000,
        q_count: 10,
        max_candidates: 5,
    };
    let rep = cyclicity_probe(37, 31, &bounds, &b).unwrap();
    assert_eq!(rep.verdict, CyclicVerdict::CertifiedCyclic, "no certificate found");
    assert!(rep.evidence.len() <= 5);
    let winning = rep.evidence.last().unwrap();
    assert!(winning.certified);
    assert!(winning.witnesses.len() <= 10, "too many auxiliary primes");

    // the emitted certificate re-verifies from witnesses alone
    let (code, out) = run_cli(&[
        "probe", "--l", "37", "--n", "31", "--p-bound", "100000", "--q-count", "10",
        "--max-candidates", "5",
    ]);
    assert_eq!(code, 0, "CLI probe failed:\n{out}");
    let env: serde_json::Value = serde_json::from_str(out.lines().next().unwrap()).unwrap();
    assert_eq!(env["result"]["verdict"], "certified-cyclic");
    let dir = tempfile::tempdir().unwrap();
    let cert_path = dir.path().join("probe.jsonl");
    std::fs::write(&cert_path, &out).unwrap();
    let (code, recheck_out) = run_cli(&["--recheck", cert_path.to_str().unwrap()]);
    assert_eq!(code, 0, "certificate recheck failed:\n{recheck_out}");

    // an exhausted window must degrade to `unknown` with its evidence,
    // never to a silent success: no auxiliary prime fits below q = 140
    let (code, out) = run_cli(&[
        "probe", "--l", "37", "--n", "31", "--p-bound", "1500", "--q-bound", "140",
    ]);
    assert_eq!(code, 3, "exhausted probe should exit 3:\n{out}");
    let env: serde_json::Value = serde_json::from_str(out.lines().next().unwrap()).unwrap();
    assert_eq!(env["result"]["verdict"], "unknown");
    assert!(
        !env["result"]["evidence"].as_array().unwrap().is_empty(),
        "exhausted probe reported no evidence"
    );
    println!("criterion 9 (certified cyclicity probe at (37, 31) with re-verification): pass");
}

#[test]
fn criterion_10_cli_determinism() {
    // byte-identical output across parallelism degrees
    let pipelines: Vec<Vec<&str>> = vec![
        vec!["theta", "--n", "3", "--b", "2", "--conductor", "15", "--field", "15"],
        vec!["bs-verify", "--m", "5", "--p", "31", "--b", "3"],
        vec!["scan", "--l-min", "3", "--l-max", "37"],
    ];
    for args in &pipelines {
        let mut one = vec!["--jobs", "1"];
        one.extend(args);
        let mut four = vec!["--jobs", "4"];
        four.extend(args);
        let (c1, o1) = run_cli(&one);
        let (c4, o4) = run_cli(&four);
        // the input echo records the differing --jobs flag by design; every
        // computed payload and digest must agree byte for byte
        let payloads = |out: &str| -> Vec<(String, String, String)> {
            out.lines()
                .map(|line| {
                    let v: serde_json::Value = serde_json::from_str(line).unwrap();
                    (
                        v["kind"].as_str().unwrap().to_owned(),
                        serde_json::to_string(&v["result"]).unwrap(),
                        v["digest"].as_str().unwrap().to_owned(),
                    )
                })
                .collect()
        };
        assert_eq!(c1, c4);
        assert_eq!(payloads(&o1), payloads(&o4), "payloads differ across --jobs for {args:?}");
        assert_eq!(c1, 0);
    }

    // --recheck revalidates one envelope of every pipeline kind
    let runs: Vec<Vec<&str>> = vec![
        vec!["theta", "--n", "0", "--b", "3", "--conductor", "5", "--field", "5"],
        vec!["congruence", "--b", "2", "--fprime", "5", "--n", "3", "--l", "3"],
        vec!["jacobi", "--m", "5", "--p", "11"],
        vec!["bs-verify", "--m", "5", "--p", "11", "--b", "3", "--normalize"],
        vec!["norm-check", "--b", "3", "--mf", "5", "--q", "7", "--p", "71"],
        vec!["kshadow", "--n", "3", "--l", "3", "--f", "5"],
        vec!["eigenspace", "--l", "37", "--i", "5"],
        vec!["probe", "--l", "37", "--n", "31", "--p-bound", "1500", "--q-count", "6"],
        vec!["scan", "--l-min", "3", "--l-max", "17"],
    ];
    let mut all = String::new();
    for args in &runs {
        let (code, out) = run_cli(args);
        assert_eq!(code, 0, "{args:?} failed:\n{out}");
        all.push_str(&out);
    }
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("envelopes.jsonl");
    std::fs::write(&path, &all).unwrap();
    let (code, out) = run_cli(&["--recheck", path.to_str().unwrap()]);
    assert_eq!(code, 0, "recheck of the run transcript failed:\n{out}");
    for line in out.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["verified"], true, "envelope failed recheck: {line}");
    }

    // resuming a checkpointed scan reproduces the uninterrupted transcript
    let ckpt = dir.path().join("scan.ckpt");
    let ckpt_arg = ckpt.to_str().unwrap();
    let (c, first) =
        run_cli(&["scan", "--l-min", "3", "--l-max", "17", "--checkpoint", ckpt_arg]);
    assert_eq!(c, 0);
    let (c, rest) =
        run_cli(&["scan", "--l-min", "3", "--l-max", "37", "--checkpoint", ckpt_arg]);
    assert_eq!(c, 0);
    let (c, full) = run_cli(&["scan", "--l-min", "3", "--l-max", "37"]);
    assert_eq!(c, 0);
    assert_eq!(
        format!("{first}{rest}"),
        full,
        "resumed scan transcript differs from the uninterrupted run"
    );
    println!("criterion 10 (deterministic, re-checkable, resumable CLI): pass");
}
