//! Public API against brute-force oracles written from the definitions.

use std::collections::BTreeSet;

use simsun_core::bijection::{phi_forward, psi_forward, psi_inverse};
use simsun_core::poly::rat;
use simsun_core::rootcheck::{certify_rz, check_relation, Relation};
use simsun_core::series::{build, SeriesName};
use simsun_core::simsun::{gen_simsun_first, gen_simsun_second};
use simsun_core::{Engine, Family, Permutation, Poly};

fn all_words(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for w in all_words(n - 1) {
        for pos in 0..=w.len() {
            let mut v = w.clone();
            v.insert(pos, n);
            out.push(v);
        }
    }
    out.sort();
    out
}

fn has_double_descent(w: &[usize]) -> bool {
    w.windows(3).any(|t| t[0] > t[1] && t[1] > t[2])
}

fn oracle_simsun_first(w: &[usize]) -> bool {
    (1..=w.len()).all(|k| {
        let r: Vec<usize> = w.iter().copied().filter(|&v| v <= k).collect();
        !has_double_descent(&r)
    })
}

/// `sigma` as a map on `1..=n`, stored at index `i - 1`.
fn remove_letter(sigma: &[usize], x: usize) -> Vec<usize> {
    let mut out = Vec::new();
    for i in 1..=sigma.len() {
        if i == x {
            continue;
        }
        let mut img = sigma[i - 1];
        if img == x {
            img = sigma[x - 1];
        }
        out.push(img);
    }
    out
}

fn has_double_excedance(sigma: &[usize]) -> bool {
    let n = sigma.len();
    let mut inv = vec![0; n + 1];
    for (i, &v) in sigma.iter().enumerate() {
        inv[v] = i + 1;
    }
    (1..=n).any(|x| inv[x] < x && x < sigma[x - 1])
}

fn oracle_simsun_second(w: &[usize]) -> bool {
    let mut sigma = w.to_vec();
    loop {
        if has_double_excedance(&sigma) {
            return false;
        }
        if sigma.is_empty() {
            return true;
        }
        let n = sigma.len();
        sigma = remove_letter(&sigma, n);
    }
}

fn des(w: &[usize]) -> u32 {
    w.windows(2).filter(|t| t[0] > t[1]).count() as u32
}

fn exc(w: &[usize]) -> u32 {
    w.iter().enumerate().filter(|&(i, &v)| v > i + 1).count() as u32
}

fn cycles(w: &[usize]) -> u32 {
    let mut seen = vec![false; w.len()];
    let mut count = 0;
    for s in 0..w.len() {
        if !seen[s] {
            count += 1;
            let mut i = s;
            while !seen[i] {
                seen[i] = true;
                i = w[i] - 1;
            }
        }
    }
    count
}

fn x_pow(k: u32) -> Poly {
    Poly::monomial([k, 0, 0], rat(1))
}

#[test]
fn first_kind_generator_matches_definition() {
    for n in 0..=7 {
        let brute: Vec<Vec<usize>> = all_words(n)
            .into_iter()
            .filter(|w| oracle_simsun_first(w))
            .collect();
        let generated: Vec<Vec<usize>> = gen_simsun_first(n)
            .into_iter()
            .map(|p| p.into_word())
            .collect();
        assert_eq!(generated, brute, "n={n}");
    }
}

#[test]
fn second_kind_generator_matches_definition() {
    for n in 0..=7 {
        let brute: BTreeSet<Vec<usize>> = all_words(n)
            .into_iter()
            .filter(|w| oracle_simsun_second(w))
            .collect();
        let generated: BTreeSet<Vec<usize>> = gen_simsun_second(n)
            .into_iter()
            .map(|c| c.to_permutation().into_word())
            .collect();
        assert_eq!(generated, brute, "n={n}");
    }
}

#[test]
fn descent_triangle_matches_brute_force() {
    let s = Engine::new().triangle(Family::S, 8).unwrap();
    for n in 0..=8 {
        let mut dist = Poly::zero();
        for w in all_words(n).iter().filter(|w| oracle_simsun_first(w)) {
            dist = &dist + &x_pow(des(w));
        }
        assert_eq!(s.row(n).unwrap(), &dist, "n={n}");
    }
}

#[test]
fn excedance_cycle_triangle_matches_brute_force() {
    let t = Engine::new().triangle(Family::Sxq, 7).unwrap();
    for n in 0..=7 {
        let mut dist = Poly::zero();
        for w in all_words(n).iter().filter(|w| oracle_simsun_second(w)) {
            dist = &dist + &Poly::monomial([exc(w), cycles(w), 0], rat(1));
        }
        assert_eq!(t.row(n).unwrap(), &dist, "n={n}");
    }
}

#[test]
fn psi_sends_descents_to_excedances_bijectively() {
    for n in 1..=7 {
        let mut images = BTreeSet::new();
        for w in all_words(n).into_iter().filter(|w| oracle_simsun_first(w)) {
            let p = Permutation::new(w.clone()).unwrap();
            let c = psi_forward(&p).unwrap();
            let image = c.to_permutation().into_word();
            assert!(oracle_simsun_second(&image));
            assert_eq!(exc(&image), des(&w));
            assert_eq!(psi_inverse(&c).unwrap(), p);
            images.insert(image);
        }
        let ss = all_words(n)
            .into_iter()
            .filter(|w| oracle_simsun_second(w))
            .count();
        assert_eq!(images.len(), ss, "n={n}");
    }
}

#[test]
fn phi_blocks_partition_the_next_symmetric_group() {
    for n in 1..=6 {
        let mut seen = BTreeSet::new();
        for w in all_words(n).into_iter().filter(|w| oracle_simsun_first(w)) {
            let block = phi_forward(&Permutation::new(w.clone()).unwrap()).unwrap();
            assert_eq!(block.image.len(), 1 << (n as u32 - des(&w)));
            for t in block.image {
                assert!(seen.insert(t.into_word()), "overlap at n={n}");
            }
        }
        assert_eq!(seen.len(), all_words(n + 1).len());
    }
}

fn oracle_snakes(n: usize) -> usize {
    let mut count = 0;
    for w in all_words(n) {
        for signs in 0..(1u32 << n) {
            let v: Vec<i64> = w
                .iter()
                .enumerate()
                .map(|(i, &a)| {
                    if signs >> i & 1 == 1 {
                        -(a as i64)
                    } else {
                        a as i64
                    }
                })
                .collect();
            let mut prev = 0;
            let ok = v.iter().enumerate().all(|(i, &x)| {
                let good = if i % 2 == 0 { x > prev } else { x < prev };
                prev = x;
                good
            });
            count += usize::from(ok);
        }
    }
    count
}

#[test]
fn springer_series_counts_snakes() {
    let s = build(SeriesName::Springer, 6).unwrap();
    for n in 0..=6 {
        assert_eq!(s.egf_coeff(n), Poly::int(oracle_snakes(n) as i64), "n={n}");
    }
}

#[test]
fn certify_known_roots() {
    let p: Poly = "2 + 7*x + 7*x^2 + 2*x^3".parse().unwrap();
    let c = certify_rz(&p).unwrap();
    assert!(c.holds());
    assert_eq!(c.isolation.roots.len(), 3);

    let double: Poly = "1 + 2*x + x^2".parse().unwrap();
    let c = certify_rz(&double).unwrap();
    assert!(c.real_rooted && c.all_nonpositive && !c.all_simple);

    let complex: Poly = "1 + x + x^2".parse().unwrap();
    assert!(!certify_rz(&complex).unwrap().real_rooted);
}

#[test]
fn relations_on_hand_built_roots() {
    // roots -3, -1 against -4, -2, 0
    let p: Poly = "3 + 4*x + x^2".parse().unwrap();
    let q: Poly = "8*x + 6*x^2 + x^3".parse().unwrap();
    assert!(check_relation(&p, &q, Relation::Interlace).unwrap().holds);
    assert!(check_relation(&p, &q, Relation::Precede).unwrap().holds);
    // roots -3, -1 against -2, -1/2
    let r: Poly = "2 + 5*x + 2*x^2".parse().unwrap();
    assert!(
        check_relation(&p, &r, Relation::AlternatesLeft)
            .unwrap()
            .holds
    );
    assert!(
        !check_relation(&r, &p, Relation::AlternatesLeft)
            .unwrap()
            .holds
    );
    assert!(check_relation(&p, &p, Relation::Interlace).is_err());
}
