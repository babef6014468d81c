//! Exhaustive machine checks of the bijections and duality identities.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::SeedableRng;
use rayon::prelude::*;
use rustc_hash::FxHashMap;
use serde::Serialize;

use crate::bijections::{
    bubble_path, iota, jdt_backward, jdt_forward, reorder, rsk_backward, rsk_forward, split, superimpose, swap_adjacent,
};
use crate::enumerate::{
    oft_tableaux, ot_tableaux, pft_tableaux, pt_order_tableaux, pt_tableaux, uft_tableaux, ut_tableaux, visit_pt,
    EnumBounds,
};
use crate::error::{Error, Result};
use crate::grothendieck::{groth, groth_dual, refined, Variant};
use crate::letter::{Letter, TotalOrder};
use crate::series::{Alphabet, Monomial, Series, Truncation, ZPoly};
use crate::shape::{Partition, SkewShape};
use crate::symfunc::{
    expand_schur, expand_schur_xy, hall_pair, omega, schur_expansion_via_flags, schur_poly, DoubleSchurExpansion,
    Flagged, SchurExpansion,
};
use crate::tableau::{check, Family, Tableau, WeightVector};

type Z = ZPoly<BigInt>;

const MAX_LISTED_FAILURES: usize = 25;

/// The checkable statements.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Identity {
    /// `ω_x ω_y Σ_{PT(λ)} x^{ℓw} y^{rw} = Σ_{PT(λ)} y^{ℓw} x^{rw}`.
    Fact1,
    /// The signed flagged-pair sum over `μ ⊆ ρ ⊆ λ` vanishes.
    Fact2,
    /// `ω_x ω_y` swaps the alphabets of `𝔊` and `𝔊*`; `ω` maps 1B to 1A and 2B to 2A.
    Duo1,
    /// `⟨𝔊_μ, 𝔊*_λ⟩ = δ_{μλ}` for both specializations.
    Duo2,
    /// RSK and jeu de taquin are weight-transporting bijections.
    LemmaRskjdt,
    /// Reordering is a weight-preserving bijection between primed tableaux under two orders.
    LemmaOrdering,
    /// `ι` is a sign-reversing involution on primed flagged tableaux.
    LemmaZ,
    /// Series expansions agree with flagged expansions; lowest terms are Schur polynomials.
    Oracle,
}

impl Identity {
    pub const ALL: [Identity; 8] = [
        Identity::Fact1,
        Identity::Fact2,
        Identity::Duo1,
        Identity::Duo2,
        Identity::LemmaRskjdt,
        Identity::LemmaOrdering,
        Identity::LemmaZ,
        Identity::Oracle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::Fact1 => "fact1",
            Identity::Fact2 => "fact2",
            Identity::Duo1 => "duo1",
            Identity::Duo2 => "duo2",
            Identity::LemmaRskjdt => "lemma-rskjdt",
            Identity::LemmaOrdering => "lemma-ordering",
            Identity::LemmaZ => "lemma-z",
            Identity::Oracle => "oracle",
        }
    }

    /// The size range checked when none is given.
    pub fn default_max_size(self) -> u32 {
        match self {
            Identity::Fact1 | Identity::Duo1 | Identity::Duo2 | Identity::Oracle => 4,
            Identity::LemmaRskjdt => 4,
            Identity::LemmaOrdering => 5,
            Identity::Fact2 | Identity::LemmaZ => 6,
        }
    }
}

impl FromStr for Identity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Identity> {
        Identity::ALL.into_iter().find(|i| i.name() == s).ok_or_else(|| Error::Parse(format!("unknown identity {s:?}")))
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Ranges for a verification run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyParams {
    pub min_size: u32,
    pub max_size: u32,
    /// Largest letter value, where the identity enumerates letters.
    pub letters: u32,
    /// Surplus entries for overfull tableaux.
    pub extra: u32,
    /// Largest shape for the jeu de taquin half of `lemma-rskjdt`.
    pub jdt_max_size: u32,
    /// Adjacent transpositions separating the compared orders.
    pub swaps: u32,
    /// Check only this many instances, drawn with `seed`.
    pub sample: Option<usize>,
    pub seed: u64,
}

impl VerifyParams {
    pub fn defaults(identity: Identity) -> VerifyParams {
        let max = identity.default_max_size();
        VerifyParams {
            min_size: 0,
            max_size: max,
            letters: 3,
            extra: 2,
            jdt_max_size: max + 1,
            swaps: 3,
            sample: None,
            seed: 0,
        }
    }

    pub fn sizes(&self) -> std::ops::RangeInclusive<u32> {
        self.min_size..=self.max_size
    }

    fn partitions(&self) -> Vec<Partition> {
        self.pick(self.sizes().flat_map(Partition::of_size).collect())
    }

    /// The seeded subsample of `items`, in their original order.
    fn pick<T>(&self, items: Vec<T>) -> Vec<T> {
        let Some(k) = self.sample else { return items };
        let mut rng = StdRng::seed_from_u64(self.seed);
        let mut keep = vec![false; items.len()];
        for i in rand::seq::index::sample(&mut rng, items.len(), k.min(items.len())) {
            keep[i] = true;
        }
        items.into_iter().zip(keep).filter(|(_, k)| *k).map(|(x, _)| x).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub identity: Identity,
    pub params: VerifyParams,
    pub instances: u64,
    /// Total number of counterexamples; at most a few are listed.
    pub failure_count: u64,
    pub failures: Vec<String>,
    #[serde(serialize_with = "as_seconds")]
    pub elapsed: Duration,
}

fn as_seconds<S: serde::Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }

    pub fn status(&self) -> &'static str {
        if self.passed() {
            "PASS"
        } else {
            "FAIL"
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut v = serde_json::to_value(self).unwrap();
        v["status"] = self.status().into();
        v
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = &self.params;
        write!(
            f,
            "{} {}: sizes {}..={}, {} checks, {} failures, {:.2}s",
            self.identity,
            self.status(),
            p.min_size,
            p.max_size,
            self.instances,
            self.failure_count,
            self.elapsed.as_secs_f64()
        )?;
        for fail in &self.failures {
            write!(f, "\n  {fail}")?;
        }
        Ok(())
    }
}

/// Running tally merged across workers; failures are sorted before reporting.
#[derive(Default)]
struct Tally {
    checks: u64,
    failure_count: u64,
    failures: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.fail(what());
        }
    }

    fn fail(&mut self, what: String) {
        self.failure_count += 1;
        if self.failures.len() < MAX_LISTED_FAILURES {
            self.failures.push(what);
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.checks += other.checks;
        self.failure_count += other.failure_count;
        self.failures.extend(other.failures);
        self
    }
}

fn par_tally<T: Sync>(items: &[T], f: impl Fn(&T, &mut Tally) + Sync) -> Tally {
    items
        .par_iter()
        .map(|x| {
            let mut t = Tally::default();
            f(x, &mut t);
            t
        })
        .reduce(Tally::default, Tally::merge)
}

pub fn run(identity: Identity, params: &VerifyParams) -> VerifyReport {
    let start = Instant::now();
    let tally = match identity {
        Identity::Fact1 => fact1(params),
        Identity::Fact2 => fact2(params),
        Identity::Duo1 => duo1(params),
        Identity::Duo2 => duo2(params),
        Identity::LemmaRskjdt => lemma_rskjdt(params),
        Identity::LemmaOrdering => lemma_ordering(params),
        Identity::LemmaZ => lemma_z(params),
        Identity::Oracle => oracle(params),
    };
    let mut failures = tally.failures;
    failures.sort();
    failures.truncate(MAX_LISTED_FAILURES);
    VerifyReport {
        identity,
        params: params.clone(),
        instances: tally.checks,
        failure_count: tally.failure_count,
        failures,
        elapsed: start.elapsed(),
    }
}

fn fits(p: &Partition, n: usize) -> bool {
    p.len() <= n && p.part(0) as usize <= n
}

/// Compares `left[(μ,ν)]` with `right[(μ',ν')]` wherever all four
/// partitions fit in `n` variables.
fn compare_conjugate_double(
    left: &DoubleSchurExpansion<BigInt>,
    right: &DoubleSchurExpansion<BigInt>,
    n: usize,
    label: &str,
    tally: &mut Tally,
) {
    let mut keys: BTreeSet<(Partition, Partition)> = left.terms().keys().cloned().collect();
    keys.extend(right.terms().keys().map(|(m, v)| (m.conjugate(), v.conjugate())));
    for (mu, nu) in keys {
        if !fits(&mu, n) || !fits(&nu, n) {
            continue;
        }
        let a = left.coeff(&mu, &nu);
        let b = right.coeff(&mu.conjugate(), &nu.conjugate());
        tally.check(a == b, || format!("{label}: ({mu};{nu}) has {a} but the conjugate side has {b}"));
    }
}

fn compare_expansions(
    left: &SchurExpansion<BigInt>,
    right: &SchurExpansion<BigInt>,
    keep: impl Fn(&Partition) -> bool,
    label: &str,
    tally: &mut Tally,
) {
    let keys: BTreeSet<&Partition> = left.terms().keys().chain(right.terms().keys()).collect();
    for rho in keys.into_iter().filter(|p| keep(p)) {
        let (a, b) = (left.coeff(rho), right.coeff(rho));
        tally.check(a == b, || format!("{label}: s[{rho}] has {a} vs {b}"));
    }
}

fn primed_tableau_series(lambda: &Partition, n: usize) -> Series<BigInt> {
    let mut f = Series::zero(Truncation::new(n, n, None));
    visit_pt(lambda, EnumBounds::new(n as u32, 0), &mut |t: &Tableau| {
        f.add_term(Monomial::new(t.left_weight(), t.right_weight(), vec![]), BigInt::from(1))
            .expect("letters bounded by n");
    });
    f
}

fn fact1(params: &VerifyParams) -> Tally {
    par_tally(&params.partitions(), |lambda, tally| {
        let n = lambda.size() as usize;
        let f = primed_tableau_series(lambda, n);
        let result = expand_schur_xy(&f).and_then(|l| Ok((l, expand_schur_xy(&f.swap_xy())?)));
        match result {
            Ok((l, r)) => compare_conjugate_double(&l, &r, n, &format!("PT({lambda})"), tally),
            Err(e) => tally.fail(format!("PT({lambda}): {e}")),
        }
    })
}

fn duo1(params: &VerifyParams) -> Tally {
    par_tally(&params.partitions(), |lambda, tally| {
        let n = lambda.size() as usize;
        let d = lambda.size() + 2;
        let run = |tally: &mut Tally| -> Result<()> {
            let g: Series<BigInt> = groth(lambda, Truncation::new(n, n, Some(d)))?;
            let (l, r) = (expand_schur_xy(&g)?, expand_schur_xy(&g.swap_xy())?);
            compare_conjugate_double(&l, &r, n, &format!("G[{lambda}]"), tally);
            let g: Series<BigInt> = groth_dual(lambda, Truncation::new(n, n, None))?;
            let (l, r) = (expand_schur_xy(&g)?, expand_schur_xy(&g.swap_xy())?);
            compare_conjugate_double(&l, &r, n, &format!("G*[{lambda}]"), tally);
            for (b, a, degree) in [(Variant::B1, Variant::A1, Some(d)), (Variant::B2, Variant::A2, None)] {
                let eb = expand_schur(&refined::<BigInt>(b, lambda, n, degree, false)?, Alphabet::X)?;
                let ea = expand_schur(&refined::<BigInt>(a, &lambda.conjugate(), n, degree, false)?, Alphabet::X)?;
                let label = format!("omega {b}[{lambda}] vs {a}[{}]", lambda.conjugate());
                compare_expansions(&omega(&eb), &ea, |p| fits(p, n), &label, tally);
            }
            Ok(())
        };
        if let Err(e) = run(tally) {
            tally.fail(format!("{lambda}: {e}"));
        }
    })
}

fn delta(a: &Partition, b: &Partition) -> Z {
    if a == b {
        ZPoly::constant(BigInt::from(1))
    } else {
        ZPoly::zero()
    }
}

/// Gram matrices of the flagged expansions, plus the same pairing computed
/// from the series themselves for shapes of size at most 3.
fn duo2(params: &VerifyParams) -> Tally {
    let shapes = params.partitions();
    let cap = params.max_size;
    let series_cap = cap.min(3);
    let mut tally = Tally::default();
    for conjugated in [false, true] {
        let g: Vec<_> =
            shapes.par_iter().map(|mu| schur_expansion_via_flags::<BigInt>(mu, Flagged::G, conjugated, cap)).collect();
        let gd: Vec<_> = shapes
            .par_iter()
            .map(|l| schur_expansion_via_flags::<BigInt>(l, Flagged::Gdual, conjugated, cap))
            .collect();
        let (a, b) = if conjugated { ("1A", "2A") } else { ("1B", "2B") };
        for (mu, gm) in shapes.iter().zip(&g) {
            for (lambda, gl) in shapes.iter().zip(&gd) {
                let got = hall_pair(gm, gl).unwrap();
                tally.check(got == delta(mu, lambda), || {
                    format!("<{a}-type[{mu}], {b}-type[{lambda}]> = {got} via flags")
                });
            }
        }
    }
    let small: Vec<Partition> = shapes.iter().filter(|p| p.size() <= series_cap).cloned().collect();
    let n = series_cap.max(1) as usize;
    let expand = |v: Variant, p: &Partition| -> Result<SchurExpansion<BigInt>> {
        let degree = if v.is_dual() { None } else { Some(series_cap) };
        expand_schur(&refined::<BigInt>(v, p, n, degree, false)?, Alphabet::X)
    };
    for (a, b) in [(Variant::B1, Variant::B2), (Variant::A1, Variant::A2)] {
        let lhs: Vec<_> = small.par_iter().map(|p| expand(a, p)).collect();
        let rhs: Vec<_> = small.par_iter().map(|p| expand(b, p)).collect();
        for (mu, l) in small.iter().zip(&lhs) {
            for (lambda, r) in small.iter().zip(&rhs) {
                match (l, r) {
                    (Ok(l), Ok(r)) => {
                        let l = l.restrict(|rho| lambda.contains(rho) || lambda.conjugate().contains(rho));
                        let got = hall_pair(&l, r).unwrap();
                        tally.check(got == delta(mu, lambda), || format!("<{a}[{mu}], {b}[{lambda}]> = {got}"));
                    }
                    (Err(e), _) | (_, Err(e)) => tally.fail(format!("<{a}[{mu}], {b}[{lambda}]>: {e}")),
                }
            }
        }
    }
    tally
}

fn lemma_rskjdt(params: &VerifyParams) -> Tally {
    let (n, b) = (params.letters, params.extra);
    let rsk_shapes = params.partitions();
    let rsk = par_tally(&rsk_shapes, |mu, tally| {
        let mut images = BTreeSet::new();
        for t in ot_tableaux(mu, EnumBounds::new(n, b)) {
            let pair = match rsk_forward(&t) {
                Ok(p) => p,
                Err(e) => {
                    tally.fail(format!("rsk {}: {e}", t.to_string().replace('\n', "/")));
                    continue;
                }
            };
            let ok = check(&pair.p, Family::Pt).is_ok()
                && check(&pair.q, Family::Oft).is_ok()
                && pair.p.left_weight() == t.left_weight()
                && pair.p.right_weight() == t.right_weight()
                && pair.q.left_weight() == t.overweight_unchecked()
                && rsk_backward(&pair).as_ref() == Ok(&t);
            tally.check(ok, || format!("rsk {}: weights, validity or round trip", t.to_string().replace('\n', "/")));
            images.insert((pair.p, pair.q));
        }
        let mut count = 0usize;
        let mut covered = true;
        for lambda in Partition::up_to_size(mu.size() + b) {
            if lambda.len() != mu.len() || !lambda.contains(mu) {
                continue;
            }
            let qs = oft_tableaux(&SkewShape::new(lambda.clone(), mu.clone()).unwrap());
            if qs.is_empty() {
                continue;
            }
            for p in pt_tableaux(&lambda, n) {
                for q in &qs {
                    count += 1;
                    covered &= images.contains(&(p.clone(), q.clone()));
                }
            }
        }
        tally.check(covered && count == images.len(), || {
            format!("rsk image for mu={mu}: {} images vs {count} bounded pairs", images.len())
        });
    });
    let jdt_params = VerifyParams { max_size: params.jdt_max_size, ..params.clone() };
    let jdt = par_tally(&jdt_params.partitions(), |lambda, tally| {
        let mut images = BTreeSet::new();
        for t in ut_tableaux(lambda, EnumBounds::new(n, 0)) {
            let pair = match jdt_forward(&t) {
                Ok(p) => p,
                Err(e) => {
                    tally.fail(format!("jdt {}: {e}", t.to_string().replace('\n', "/")));
                    continue;
                }
            };
            let ok = check(&pair.p, Family::Pt).is_ok()
                && check(&pair.q, Family::Uft).is_ok()
                && pair.p.left_weight() == t.left_weight()
                && pair.p.right_weight() == t.right_weight()
                && pair.q.right_weight() == t.underweight_unchecked()
                && jdt_backward(&pair).as_ref() == Ok(&t);
            tally.check(ok, || format!("jdt {}: weights, validity or round trip", t.to_string().replace('\n', "/")));
            images.insert((pair.p, pair.q));
        }
        let mut count = 0usize;
        let mut covered = true;
        for mu in lambda.subpartitions() {
            let qs = uft_tableaux(&SkewShape::new(lambda.clone(), mu.clone()).unwrap());
            if qs.is_empty() {
                continue;
            }
            for p in pt_tableaux(&mu, n) {
                for q in &qs {
                    count += 1;
                    covered &= images.contains(&(p.clone(), q.clone()));
                }
            }
        }
        tally.check(covered && count == images.len(), || {
            format!("jdt image for lambda={lambda}: {} images vs {count} pairs", images.len())
        });
    });
    rsk.merge(jdt)
}

fn all_orders(n: u32) -> Vec<TotalOrder> {
    fn permute(rest: &mut Vec<Letter>, cur: &mut Vec<Letter>, out: &mut Vec<TotalOrder>) {
        if rest.is_empty() {
            out.push(TotalOrder::new(cur.clone()).unwrap());
            return;
        }
        for k in 0..rest.len() {
            let l = rest.remove(k);
            cur.push(l);
            permute(rest, cur, out);
            cur.pop();
            rest.insert(k, l);
        }
    }
    let mut letters: Vec<Letter> = TotalOrder::standard(n).sequence().to_vec();
    let mut out = Vec::new();
    permute(&mut letters, &mut Vec::new(), &mut out);
    out
}

fn skew_shapes(min: u32, max: u32) -> Vec<SkewShape> {
    let mut out = Vec::new();
    for lambda in Partition::up_to_size(max) {
        if lambda.size() < min {
            continue;
        }
        for mu in lambda.subpartitions() {
            out.push(SkewShape::new(lambda.clone(), mu).unwrap());
        }
    }
    out
}

/// Orders reachable from `o` by at most `d` adjacent transpositions.
fn neighbourhood(o: &TotalOrder, d: u32) -> Vec<TotalOrder> {
    let mut seen: BTreeSet<Vec<Letter>> = BTreeSet::new();
    let mut frontier = vec![o.clone()];
    seen.insert(o.sequence().to_vec());
    for _ in 0..d {
        let mut next = Vec::new();
        for f in &frontier {
            for k in 0..f.sequence().len() - 1 {
                let g = f.swapped(k);
                if seen.insert(g.sequence().to_vec()) {
                    next.push(g);
                }
            }
        }
        frontier = next;
    }
    seen.into_iter().map(|s| TotalOrder::new(s).unwrap()).collect()
}

/// Source order, target order, and the (order, position) steps between them.
type PathEntry = (usize, usize, Vec<(usize, usize)>);

/// Every adjacent swap map is tabulated once per shape; the reorder map for
/// each compared pair of orders is the composite along its bubble-sort path,
/// checked as a bijection onto the target set. The literal `reorder` call is
/// also cross-checked from the standard order and between the three classic
/// orders.
fn lemma_ordering(params: &VerifyParams) -> Tally {
    let n = params.letters;
    let orders = all_orders(n);
    let index: HashMap<Vec<Letter>, usize> =
        orders.iter().enumerate().map(|(k, o)| (o.sequence().to_vec(), k)).collect();
    let pairs: Vec<(usize, usize)> = orders
        .iter()
        .enumerate()
        .flat_map(|(k, o)| neighbourhood(o, params.swaps).into_iter().map(move |t| (k, t)))
        .map(|(k, t)| (k, index[t.sequence()]))
        .collect();
    // each compared pair as its sequence of (order, swap position) steps
    let paths: Vec<PathEntry> = pairs
        .iter()
        .map(|&(from, to)| {
            let path = bubble_path(&orders[from], &orders[to]).unwrap();
            let steps = path
                .windows(2)
                .map(|w| (index[w[0].sequence()], w[0].adjacent_transposition_to(&w[1]).unwrap()))
                .collect();
            (from, to, steps)
        })
        .collect();
    let needed: BTreeSet<(usize, usize)> = paths.iter().flat_map(|p| p.2.iter().copied()).collect();
    let shapes = params.pick(skew_shapes(params.min_size, params.max_size));
    par_tally(&shapes, |shape, tally| {
        let sets: Vec<Vec<Tableau>> = orders.iter().map(|o| pt_order_tableaux(shape, o, n).unwrap()).collect();
        let lookup: Vec<FxHashMap<Vec<u8>, u32>> =
            sets.iter().map(|s| s.iter().enumerate().map(|(i, t)| (letter_key(t), i as u32)).collect()).collect();
        // steps[(o, k)][i]: image of tableau i of order o under the swap at position k
        let mut steps: HashMap<(usize, usize), Vec<u32>> = HashMap::with_capacity(needed.len());
        for &(oi, k) in &needed {
            let o = &orders[oi];
            let target = index[o.swapped(k).sequence()];
            let map: Vec<u32> = sets[oi]
                .iter()
                .map(|t| match swap_adjacent(t, o, &orders[target]) {
                    Ok(u) => match lookup[target].get(&letter_key(&u)) {
                        Some(&j) if u.left_weight() == t.left_weight() && u.right_weight() == t.right_weight() => j,
                        _ => {
                            tally.fail(format!("{shape}: swap {k} of {o} breaks weights or validity"));
                            u32::MAX
                        }
                    },
                    Err(e) => {
                        tally.fail(format!("{shape}: swap {k} of {o}: {e}"));
                        u32::MAX
                    }
                })
                .collect();
            steps.insert((oi, k), map);
        }
        let weights: Vec<Vec<(WeightVector, WeightVector)>> =
            sets.iter().map(|s| s.iter().map(|t| (t.left_weight(), t.right_weight())).collect()).collect();
        for (from, to, path) in &paths {
            let (from, to) = (*from, *to);
            let mut image: Vec<u32> = (0..sets[from].len() as u32).collect();
            for step in path {
                let map = &steps[step];
                for x in image.iter_mut() {
                    if *x != u32::MAX {
                        *x = map[*x as usize];
                    }
                }
            }
            let mut hit = vec![false; sets[to].len()];
            let mut ok = sets[from].len() == sets[to].len();
            for (i, &j) in image.iter().enumerate() {
                ok &= j != u32::MAX && !std::mem::replace(&mut hit[j as usize], true);
                ok &= j != u32::MAX && weights[from][i] == weights[to][j as usize];
            }
            tally.check(ok, || {
                format!("{shape}: reorder {} -> {} is not a weight-preserving bijection", orders[from], orders[to])
            });
        }
        let std = TotalOrder::standard(n);
        let classic = [std.clone(), TotalOrder::unprimed_first(n), TotalOrder::primed_first(n)];
        let mut literal: Vec<(TotalOrder, TotalOrder)> =
            neighbourhood(&std, params.swaps).into_iter().map(|t| (std.clone(), t)).collect();
        for a in &classic {
            for b in &classic {
                literal.push((a.clone(), b.clone()));
            }
        }
        for (a, b) in literal {
            let source = &sets[index[a.sequence()]];
            let target = &lookup[index[b.sequence()]];
            let mut image = BTreeSet::new();
            let mut ok = true;
            for t in source {
                match reorder(t, &a, &b) {
                    Ok(u) => {
                        ok &= target.contains_key(&letter_key(&u))
                            && u.left_weight() == t.left_weight()
                            && u.right_weight() == t.right_weight();
                        image.insert(u);
                    }
                    Err(_) => ok = false,
                }
            }
            ok &= image.len() == target.len() && image.len() == source.len();
            tally.check(ok, || format!("{shape}: reorder {a} -> {b} fails the set comparison"));
        }
    })
}

/// The letters of a one-letter-per-box tableau in reading order.
fn letter_key(t: &Tableau) -> Vec<u8> {
    t.cells().map(|(_, f)| f.single_letter().map_or(0, |l| l.standard_key() as u8)).collect()
}

fn skew_shapes_equal_rows(min: u32, max: u32) -> Vec<SkewShape> {
    skew_shapes(min, max).into_iter().filter(|s| s.inner() != s.outer() && s.inner().len() == s.outer().len()).collect()
}

fn lemma_z(params: &VerifyParams) -> Tally {
    par_tally(&params.pick(skew_shapes_equal_rows(params.min_size, params.max_size)), |shape, tally| {
        let all = pft_tableaux(shape);
        let mut signed: BTreeMap<WeightVector, i64> = BTreeMap::new();
        for t in &all {
            let s = if t.unprimed_count() % 2 == 0 { 1 } else { -1 };
            let w = t.left_weight().add(&t.right_weight());
            *signed.entry(w.clone()).or_default() += s;
            match iota(t) {
                Ok(u) => {
                    let ok = &u != t
                        && iota(&u).as_ref() == Ok(t)
                        && u.left_weight().add(&u.right_weight()) == w
                        && (u.unprimed_count() + t.unprimed_count()) % 2 == 1;
                    tally.check(ok, || format!("{shape}: iota fails at {}", t.to_string().replace('\n', "/")));
                }
                Err(e) => tally.fail(format!("{shape}: iota: {e}")),
            }
        }
        tally.check(signed.values().all(|&v| v == 0), || format!("{shape}: signed PFT sum is nonzero"));
    })
}

fn fact2(params: &VerifyParams) -> Tally {
    par_tally(&params.pick(skew_shapes_equal_rows(params.min_size, params.max_size)), |shape, tally| {
        let (lambda, mu) = (shape.outer(), shape.inner());
        let mut sum = Z::zero();
        let mut pairs = 0usize;
        for rho in lambda.subpartitions() {
            if !rho.contains(mu) || rho.len() != mu.len() {
                continue;
            }
            let ps = oft_tableaux(&SkewShape::new(rho.clone(), mu.clone()).unwrap());
            let qs = uft_tableaux(&SkewShape::new(lambda.clone(), rho.clone()).unwrap());
            let sign = if (rho.size() - mu.size()) % 2 == 0 { 1 } else { -1 };
            for p in &ps {
                for q in &qs {
                    pairs += 1;
                    sum.add_term(p.left_weight().add(&q.right_weight()), BigInt::from(sign));
                    let ok = superimpose(p, q).and_then(|r| split(&r)).is_ok_and(|(a, b)| &a == p && &b == q);
                    tally.check(ok, || format!("{shape}: split(superimpose) differs at rho={rho}"));
                }
            }
        }
        tally.check(sum.is_zero(), || format!("{shape}: signed sum is {sum}"));
        let count = pft_tableaux(shape).len();
        tally.check(count == pairs, || format!("{shape}: {count} PFT vs {pairs} flagged pairs"));
    })
}

fn oracle(params: &VerifyParams) -> Tally {
    par_tally(&params.partitions(), |lambda, tally| {
        let n = (lambda.size() as usize).max(1);
        let run = |tally: &mut Tally| -> Result<()> {
            let series = expand_schur(&groth_dual::<BigInt>(lambda, Truncation::new(n, 0, None))?, Alphabet::X)?;
            let flags = schur_expansion_via_flags::<BigInt>(lambda, Flagged::Gdual, false, 0);
            tally.check(series.terms() == flags.terms(), || format!("G*[{lambda}]: series and flag expansions differ"));

            let cap = lambda.size() + 2;
            let series = expand_schur(&groth::<BigInt>(lambda, Truncation::new(n, 0, Some(cap)))?, Alphabet::X)?;
            let flags = schur_expansion_via_flags::<BigInt>(lambda, Flagged::G, false, cap);
            compare_expansions(&series, &flags, |p| p.len() <= n, &format!("G[{lambda}]"), tally);

            let low = refined::<BigInt>(Variant::A1, lambda, 3, Some(lambda.size()), false)?
                .xy_homogeneous_part(lambda.size());
            let s = schur_poly::<BigInt>(lambda, 3);
            tally.check(low.terms().eq(s.terms()), || format!("lowest part of 1A[{lambda}] is not s[{lambda}]"));
            let low = refined::<BigInt>(Variant::B1, lambda, 3, Some(lambda.size()), false)?
                .xy_homogeneous_part(lambda.size());
            tally.check(low.terms().eq(s.terms()), || format!("lowest part of 1B[{lambda}] is not s[{lambda}]"));
            Ok(())
        };
        if let Err(e) = run(tally) {
            tally.fail(format!("{lambda}: {e}"));
        }
    })
}
