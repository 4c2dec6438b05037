//! The K₀-discontinuity report: `K₀(lim R_n) ≅ K₀(O_∞) ≅ Z` while
//! `lim K₀(R_n) = lim Z/nZ = Ẑ`, shown at finite truncation depth.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::k0::{k0, K0Descriptor};
use crate::padic::PAdicInt;
use crate::profinite::{factorial, nonintegrality_witness, project, ProfiniteInt};
use crate::word::AlgebraTag;

/// How far past the requested depth the witness search is continued, for
/// information only.
const WITNESS_LOOKAHEAD: usize = 12;

/// Injectivity of `z ↦ z mod M` on `[-bound, bound]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Injectivity {
    pub modulus: BigInt,
    pub bound: u64,
    pub holds: bool,
    /// Two distinct integers with the same residue.
    pub collision: Option<(i64, i64)>,
}

/// Checks injectivity; by enumeration when the modulus is small enough to
/// index a table, otherwise by the fact that `2·bound + 1` consecutive
/// integers have distinct residues iff they number at most `M`.
pub fn injectivity(modulus: &BigInt, bound: u64) -> Injectivity {
    const TABLE_LIMIT: u64 = 1 << 26;
    let b = bound as i64;
    let mut collision = None;
    match modulus.to_u64().filter(|&m| m <= TABLE_LIMIT) {
        Some(m) => {
            let mut seen: Vec<Option<i64>> = vec![None; m as usize];
            for z in -b..=b {
                let r = z.rem_euclid(m as i64) as usize;
                if let Some(w) = seen[r] {
                    collision = Some((w, z));
                    break;
                }
                seen[r] = Some(z);
            }
        }
        None => {
            if BigInt::from(2 * bound as u128 + 1) > *modulus {
                let m = modulus.to_i64().expect("modulus below 2·bound + 1");
                collision = Some((-b, -b + m));
            }
        }
    }
    Injectivity { modulus: modulus.clone(), bound, holds: collision.is_none(), collision }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PAdicSection {
    pub p: u64,
    pub precision: usize,
    pub limit_k0: K0Descriptor,
    pub moduli: Vec<BigInt>,
    pub injectivity: Injectivity,
    /// `x mod p^k` agrees between the factorial and `p`-adic truncations
    /// for every `p^k | (depth+1)!` and sampled `x`.
    pub compatible: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscontinuityReport {
    pub depth: usize,
    pub bound: u64,
    /// `K₀(lim R_n) = K₀(O_∞)`.
    pub limit_k0: K0Descriptor,
    /// `(j+1)!` for `j = 1..=depth`: the truncated `lim Z/nZ`.
    pub moduli: Vec<BigInt>,
    pub injectivity: Injectivity,
    /// Residue of the all-ones factorial element at full depth.
    pub all_ones_residue: BigInt,
    /// Witness depth `≤ depth` for the all-ones element, if any.
    pub witness: Option<usize>,
    /// First witness depth found when the search is continued further.
    pub witness_beyond: Option<usize>,
    pub padic: PAdicSection,
}

impl DiscontinuityReport {
    pub fn passed(&self) -> bool {
        self.limit_k0 == K0Descriptor::FreeRankOne && self.injectivity.holds && self.witness.is_some()
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let w = &mut out;
        writeln!(w, "K0 discontinuity at depth {} with bound {}", self.depth, self.bound).unwrap();
        writeln!(w, "  K0(lim O_(n+1)) = K0(O_inf) = {}", self.limit_k0).unwrap();
        let moduli: Vec<String> = self.moduli.iter().map(|m| m.to_string()).collect();
        writeln!(w, "  lim K0(O_(n+1)) truncated to residues mod {}", moduli.join(", ")).unwrap();
        match self.injectivity.collision {
            None => writeln!(w, "  Z -> Z/{}Z is injective on [-{b}, {b}]", self.injectivity.modulus, b = self.bound).unwrap(),
            Some((a, b)) => writeln!(w, "  Z -> Z/{}Z is NOT injective on [-{}, {}]: {} and {} collide", self.injectivity.modulus, self.bound, self.bound, a, b).unwrap(),
        }
        writeln!(w, "  all-ones factorial element: residue {} mod {}!", self.all_ones_residue, self.depth + 1).unwrap();
        match self.witness {
            Some(d) => writeln!(w, "  nonintegrality witness at depth {d}: no integer in [-{b}, {b}] matches", b = self.bound).unwrap(),
            None => {
                writeln!(w, "  nonintegrality witness: inconclusive up to depth {}", self.depth).unwrap();
                if let Some(d) = self.witness_beyond {
                    writeln!(w, "  (continuing the search, the first witness appears at depth {d})").unwrap();
                }
            }
        }
        let p = &self.padic;
        writeln!(w, "  p-adic variant, p = {}, precision {}: K0(lim O_(p^n+1)) = {}", p.p, p.precision, p.limit_k0).unwrap();
        writeln!(w, "    Z -> Z/{}Z injective on [-{}, {}]: {}", p.injectivity.modulus, self.bound, self.bound, p.injectivity.holds).unwrap();
        writeln!(w, "    agrees with the factorial truncation: {}", p.compatible).unwrap();
        writeln!(w, "verdict: {}", if self.passed() { "pass" } else { "fail" }).unwrap();
        out
    }

    /// Flat `key=value` lines.
    pub fn to_kv(&self) -> String {
        let join = |v: &[BigInt]| v.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(",");
        let opt = |o: Option<usize>| o.map_or("none".to_string(), |d| d.to_string());
        let pair = |c: Option<(i64, i64)>| c.map_or("none".to_string(), |(a, b)| format!("{a},{b}"));
        let mut out = String::new();
        let w = &mut out;
        writeln!(w, "depth={}", self.depth).unwrap();
        writeln!(w, "bound={}", self.bound).unwrap();
        writeln!(w, "limit.k0={}", self.limit_k0).unwrap();
        writeln!(w, "truncated.moduli={}", join(&self.moduli)).unwrap();
        writeln!(w, "injectivity.modulus={}", self.injectivity.modulus).unwrap();
        writeln!(w, "injectivity.holds={}", self.injectivity.holds).unwrap();
        writeln!(w, "injectivity.collision={}", pair(self.injectivity.collision)).unwrap();
        writeln!(w, "witness.element=all-ones").unwrap();
        writeln!(w, "witness.residue={}", self.all_ones_residue).unwrap();
        writeln!(w, "witness.depth={}", opt(self.witness)).unwrap();
        writeln!(w, "witness.depth_beyond={}", opt(self.witness_beyond)).unwrap();
        writeln!(w, "padic.p={}", self.padic.p).unwrap();
        writeln!(w, "padic.precision={}", self.padic.precision).unwrap();
        writeln!(w, "padic.limit.k0={}", self.padic.limit_k0).unwrap();
        writeln!(w, "padic.moduli={}", join(&self.padic.moduli)).unwrap();
        writeln!(w, "padic.injectivity.holds={}", self.padic.injectivity.holds).unwrap();
        writeln!(w, "padic.injectivity.collision={}", pair(self.padic.injectivity.collision)).unwrap();
        writeln!(w, "padic.compatible={}", self.padic.compatible).unwrap();
        writeln!(w, "verdict={}", if self.passed() { "pass" } else { "fail" }).unwrap();
        out
    }
}

fn padic_section(depth: usize, bound: u64, p: u64, precision: usize) -> PAdicSection {
    let pb = BigInt::from(p);
    let moduli: Vec<BigInt> = (1..=precision).map(|k| pb.pow(k as u32)).collect();
    let modulus = pb.pow(precision as u32);
    let top = factorial(depth + 1);
    let mut compatible = true;
    for z in -50i64..=50 {
        let x = ProfiniteInt::from_integer(z, depth);
        let padic = PAdicInt::from_integer_p(z, p, precision).expect("p >= 2");
        for k in 1..=precision {
            let pk = pb.pow(k as u32);
            if (&top % &pk) != BigInt::from(0) {
                break;
            }
            let via_factorial = pk.to_u64().and_then(|m| project(&x, m).ok());
            compatible &= via_factorial.map(BigInt::from) == padic.project_pk(k).ok();
        }
    }
    PAdicSection { p, precision, limit_k0: k0(AlgebraTag::Infinite), moduli, injectivity: injectivity(&modulus, bound), compatible }
}

/// Builds the report for the factorial chain at `depth` and the chain
/// `{p^n}` at `precision`.
pub fn discontinuity_report(depth: usize, bound: u64, p: u64, precision: usize) -> DiscontinuityReport {
    let moduli: Vec<BigInt> = (1..=depth).map(|j| factorial(j + 1)).collect();
    let b = BigInt::from(bound);
    let ones = ProfiniteInt::all_ones(depth);
    let witness = nonintegrality_witness(&ones, &b);
    let witness_beyond = witness.or_else(|| nonintegrality_witness(&ProfiniteInt::all_ones(depth + WITNESS_LOOKAHEAD), &b));
    DiscontinuityReport {
        depth,
        bound,
        limit_k0: k0(AlgebraTag::Infinite),
        injectivity: injectivity(&factorial(depth + 1), bound),
        moduli,
        all_ones_residue: ones.value().clone(),
        witness,
        witness_beyond,
        padic: padic_section(depth, bound, p, precision),
    }
}
