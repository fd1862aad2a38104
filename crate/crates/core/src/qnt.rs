//! Arithmetic in `Z[q] / ([m])` with `[m] = 1 + q + ... + q^{m-1}`: the
//! q-analogs of the Fermat, Euler and Wilson theorems, congruences without
//! classical analogs, and the polynomials `chi_p`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exact::intpoly::is_prime_u64;
use crate::exact::{BigRat, QLaurent};
use crate::qkit::{choose2, q_binomial_poly, qn};
use crate::verdict::{Mode, Verdict};

/// Residue modulo `[m]` in the basis `1, q, ..., q^{m-2}`; trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ModElem {
    m: u64,
    residue: Vec<BigInt>,
}

impl ModElem {
    fn from_folded(m: u64, mut folded: Vec<BigInt>) -> Self {
        debug_assert_eq!(folded.len() as u64, m);
        // q^{m-1} = -(1 + q + ... + q^{m-2})
        let top = folded.pop().unwrap_or_default();
        if !top.is_zero() {
            for c in folded.iter_mut() {
                *c -= &top;
            }
        }
        while folded.last().is_some_and(Zero::is_zero) {
            folded.pop();
        }
        ModElem { m, residue: folded }
    }

    fn check_modulus(m: u64) -> Result<()> {
        if m < 2 {
            return Err(Error::InvalidArgument(format!("modulus [m] needs m >= 2, got {m}")));
        }
        Ok(())
    }

    /// Reduces integer coefficients given as `(exponent, coefficient)` pairs.
    pub fn from_terms(m: u64, terms: impl IntoIterator<Item = (i64, BigInt)>) -> Result<Self> {
        Self::check_modulus(m)?;
        let mut folded = vec![BigInt::zero(); m as usize];
        for (e, c) in terms {
            folded[e.rem_euclid(m as i64) as usize] += c;
        }
        Ok(Self::from_folded(m, folded))
    }

    pub fn zero(m: u64) -> Self {
        ModElem { m, residue: Vec::new() }
    }

    pub fn from_int(m: u64, n: i64) -> Self {
        Self::from_terms(m, [(0, BigInt::from(n))]).expect("modulus checked by caller")
    }

    pub fn one(m: u64) -> Self {
        Self::from_int(m, 1)
    }

    /// `c q^e`.
    pub fn monomial(m: u64, c: i64, e: i64) -> Self {
        Self::from_terms(m, [(e, BigInt::from(c))]).expect("modulus checked by caller")
    }

    /// `[a]_{q^r} = sum_{i<a} q^{ri}`, any integer `r`; `a >= 0`.
    pub fn q_int(m: u64, a: u64, r: i64) -> Self {
        Self::from_terms(m, (0..a as i64).map(|i| (r * i, BigInt::one()))).expect("modulus checked by caller")
    }

    pub fn modulus(&self) -> u64 {
        self.m
    }

    pub fn residue(&self) -> &[BigInt] {
        &self.residue
    }

    pub fn is_zero(&self) -> bool {
        self.residue.is_empty()
    }

    /// Canonical residue as a polynomial in `q`.
    pub fn to_laurent(&self) -> QLaurent {
        QLaurent::new('q', 0, self.residue.iter().cloned().map(BigRat::from_integer).collect())
    }

    /// Value at `q = 1`; for prime `m = p` this is the image in `Z/p`.
    pub fn at_one(&self) -> BigInt {
        self.residue.iter().sum()
    }

    fn same_modulus(&self, other: &Self) {
        assert_eq!(self.m, other.m, "residues modulo different [m]");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.same_modulus(other);
        let n = self.residue.len().max(other.residue.len());
        let terms = (0..n).map(|i| {
            let a = self.residue.get(i).cloned().unwrap_or_default();
            let b = other.residue.get(i).cloned().unwrap_or_default();
            (i as i64, a + b)
        });
        Self::from_terms(self.m, terms).expect("valid modulus")
    }

    pub fn neg(&self) -> Self {
        ModElem { m: self.m, residue: self.residue.iter().map(|c| -c).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.same_modulus(other);
        let m = self.m as usize;
        let mut folded = vec![BigInt::zero(); m];
        for (i, a) in self.residue.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.residue.iter().enumerate() {
                if !b.is_zero() {
                    folded[(i + j) % m] += a * b;
                }
            }
        }
        Self::from_folded(self.m, folded)
    }

    pub fn product<'a>(m: u64, factors: impl IntoIterator<Item = &'a ModElem>) -> Self {
        factors.into_iter().fold(Self::one(m), |acc, f| acc.mul(f))
    }
}

impl fmt::Display for ModElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_laurent())
    }
}

impl fmt::Debug for ModElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ModElem({} mod [{}])", self, self.m)
    }
}

/// Canonical residue of `f` modulo `[m]`. Negative exponents fold through
/// `q^{-1} = q^{m-1}`; rational coefficients are rejected.
pub fn reduce_mod(f: &QLaurent, m: u64) -> Result<ModElem> {
    if !f.is_integral() {
        return Err(Error::NonIntegerCoefficient(f.to_string()));
    }
    ModElem::from_terms(m, f.terms().map(|(e, c)| (e, c.to_integer())))
}

fn check_prime(p: u64) -> Result<()> {
    if is_prime_u64(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

fn check_odd_prime(p: u64) -> Result<()> {
    check_prime(p)?;
    if p == 2 {
        return Err(Error::InvalidArgument("needs an odd prime".into()));
    }
    Ok(())
}

/// `<a^n> = prod_{k=1}^{n} [a]_{q^k}` modulo `[m]`.
pub fn quantum_pow_mod(a: u64, n: u64, m: u64) -> ModElem {
    let factors: Vec<ModElem> = (1..=n as i64).map(|k| ModElem::q_int(m, a, k)).collect();
    ModElem::product(m, &factors)
}

fn expect_eq(v: Verdict, label: &str, got: &ModElem, want: &ModElem) -> Verdict {
    if got == want {
        v
    } else {
        v.failed(label, [("lhs", got.to_string()), ("rhs", want.to_string())])
    }
}

/// q-Fermat: `<a^{p-1}> ≡ 1`, `<a^p> ≡ a` for `(a, p) = 1`, otherwise
/// `<a^p> ≡ [a] ≡ 0`, all modulo `[p]`. The image at `q = 1` is checked
/// against the classical statement as well.
pub fn q_fermat_check(a: u64, p: u64) -> Result<Verdict> {
    check_prime(p)?;
    if a == 0 {
        return Err(Error::InvalidArgument("q_fermat_check needs a >= 1".into()));
    }
    let v = Verdict::new("q-fermat", Mode::Congruence).param("a", a).param("p", p);
    let full = quantum_pow_mod(a, p, p);
    if !a.is_multiple_of(p) {
        let low = quantum_pow_mod(a, p - 1, p);
        let one = ModElem::one(p);
        let v = expect_eq(v, "<a^(p-1)> = 1", &low, &one);
        let v = expect_eq(v, "<a^p> = a", &full, &ModElem::from_int(p, a as i64));
        if !v.is_pass() {
            return Ok(v);
        }
        let classical = BigInt::from(a).modpow(&BigInt::from(p - 1), &BigInt::from(p));
        if low.at_one().mod_floor(&BigInt::from(p)) != classical || !classical.is_one() {
            return Ok(v.failed("q = 1", [("residue_at_1", low.at_one())]));
        }
        Ok(v.passed("<a^(p-1)> = 1 and <a^p> = a mod [p]"))
    } else {
        let qa = ModElem::q_int(p, a, 1);
        let zero = ModElem::zero(p);
        let v = expect_eq(v, "[a] = 0", &qa, &zero);
        let v = expect_eq(v, "<a^p> = [a]", &full, &qa);
        if !v.is_pass() {
            return Ok(v);
        }
        Ok(v.passed("<a^p> = [a] = 0 mod [p]"))
    }
}

/// Residues in `1..m` coprime to `m`, ascending.
pub fn coprime_residues(m: u64) -> Vec<u64> {
    (1..m).filter(|r| r.gcd(&m) == 1).collect()
}

fn euler_factors(a: u64, m: u64) -> Result<Vec<ModElem>> {
    ModElem::check_modulus(m)?;
    if a.gcd(&m) != 1 {
        return Err(Error::NotCoprime { a, m });
    }
    Ok(coprime_residues(m).into_iter().map(|r| ModElem::q_int(m, a, r as i64)).collect())
}

/// q-Euler: `prod_{r coprime to m} [a]_{q^r} ≡ 1 (mod [m])`.
pub fn q_euler_check(a: u64, m: u64) -> Result<Verdict> {
    let factors = euler_factors(a, m)?;
    let v = Verdict::new("q-euler", Mode::Congruence).param("a", a).param("m", m);
    let prod = ModElem::product(m, &factors);
    let v = expect_eq(v, "product = 1", &prod, &ModElem::one(m));
    if !v.is_pass() {
        return Ok(v);
    }
    let classical = BigInt::from(a).modpow(&BigInt::from(factors.len()), &BigInt::from(m));
    if prod.at_one().mod_floor(&BigInt::from(m)) != classical {
        return Ok(v.failed("q = 1", [("residue_at_1", prod.at_one())]));
    }
    Ok(v.passed(format!("phi(m) = {} factors", factors.len())))
}

/// Solves `[a]_{q^{r_j}} x ≡ b (mod [m])` by `x = b prod_{i != j} [a]_{q^{r_i}}`;
/// `j` indexes [`coprime_residues`].
pub fn modp_solve(a: u64, j: usize, b: &ModElem, m: u64) -> Result<ModElem> {
    let factors = euler_factors(a, m)?;
    if j >= factors.len() {
        return Err(Error::InvalidArgument(format!(
            "index {j} outside the {} coprime residues",
            factors.len()
        )));
    }
    if b.modulus() != m {
        return Err(Error::InvalidArgument("right-hand side lives modulo another [m]".into()));
    }
    let others = factors.iter().enumerate().filter(|&(i, _)| i != j).map(|(_, f)| f);
    let x = b.mul(&ModElem::product(m, others));
    if factors[j].mul(&x) != *b {
        return Err(Error::InvalidArgument("solution failed re-verification".into()));
    }
    Ok(x)
}

/// `a -> ā` with `a ā ≡ 1 (mod p)`, `0 < ā < p`.
pub fn inverse_table(p: u64) -> Result<BTreeMap<u64, u64>> {
    check_prime(p)?;
    Ok((1..p)
        .map(|a| {
            let inv = BigInt::from(a).modpow(&BigInt::from(p - 2), &BigInt::from(p));
            (a, inv.to_u64().expect("residue below p"))
        })
        .collect())
}

/// q-Wilson: `prod_{a=1}^{p-1} [a]_{q^{ā-1}} ≡ -q^{-1} ≡ [p-1] (mod [p])`.
pub fn q_wilson_check(p: u64) -> Result<Verdict> {
    check_odd_prime(p)?;
    let inv = inverse_table(p)?;
    let factors: Vec<ModElem> = inv.iter().map(|(&a, &ab)| ModElem::q_int(p, a, ab as i64 - 1)).collect();
    let prod = ModElem::product(p, &factors);
    let v = Verdict::new("q-wilson", Mode::Congruence).param("p", p);
    let v = expect_eq(v, "product = -q^-1", &prod, &ModElem::monomial(p, -1, -1));
    let v = expect_eq(v, "product = [p-1]", &prod, &ModElem::q_int(p, p - 1, 1));
    if !v.is_pass() {
        return Ok(v);
    }
    let classical = (1..p).fold(BigInt::one(), |acc, k| acc * k) % p;
    if prod.at_one().mod_floor(&BigInt::from(p)) != classical || classical != BigInt::from(p - 1) {
        return Ok(v.failed("q = 1", [("residue_at_1", prod.at_one())]));
    }
    Ok(v.passed("both forms"))
}

/// Polynomial in `x` with residue coefficients, multiplied by `c0 + c1 x`.
fn xpoly_mul_linear(poly: &[ModElem], c0: &ModElem, c1: &ModElem) -> Vec<ModElem> {
    let m = c0.modulus();
    let mut out = vec![ModElem::zero(m); poly.len() + 1];
    for (i, c) in poly.iter().enumerate() {
        out[i] = out[i].add(&c.mul(c0));
        out[i + 1] = out[i + 1].add(&c.mul(c1));
    }
    out
}

fn expect_xpoly(v: Verdict, label: &str, got: &[ModElem], want: &[ModElem]) -> Verdict {
    if !v.is_pass() {
        return v;
    }
    let m = got.first().map(ModElem::modulus).unwrap_or(2);
    let n = got.len().max(want.len());
    for i in 0..n {
        let g = got.get(i).cloned().unwrap_or_else(|| ModElem::zero(m));
        let w = want.get(i).cloned().unwrap_or_else(|| ModElem::zero(m));
        if g != w {
            return v.failed(format!("{label}, x^{i}"), [("lhs", g.to_string()), ("rhs", w.to_string())]);
        }
    }
    v
}

/// Square roots of `-1` modulo `p` in `1..p`.
pub fn sqrt_minus_one(p: u64) -> Vec<u64> {
    (1..p).filter(|a| (a * a + 1) % p == 0).collect()
}

/// Congruences modulo `[p]` with no classical analog:
/// `(1 ∸ q)^{p-1} ≡ p`; `[p, k] ≡ 0` for `0 < k < p`;
/// `[p-1, k] ≡ (-1)^k q^{-C(k+1,2)}`; `(1 ∸ qx)^{p-1} ≡ 1 + x + ... + x^{p-1}`;
/// `(1 ∔ x)^p ≡ 1 + x^p`; and for `p ≡ 1 (mod 4)`, `a^2 ≡ -1`:
/// `[a]_{q^{-1-a}} [a]_{q^{-1+a}} ≡ -q^{1-a}`.
pub fn special_congruences_check(p: u64) -> Result<Verdict> {
    check_odd_prime(p)?;
    let mut v = Verdict::new("special-congruences", Mode::Congruence).param("p", p);
    let one = ModElem::one(p);

    let poch = (1..p as i64).fold(one.clone(), |acc, i| acc.mul(&ModElem::one(p).sub(&ModElem::monomial(p, 1, i))));
    v = expect_eq(v, "(1-q)^(p-1) = p", &poch, &ModElem::from_int(p, p as i64));

    for k in 0..=p as u32 {
        let want = if k == 0 || k as u64 == p { one.clone() } else { ModElem::zero(p) };
        v = expect_eq(v, &format!("[p,{k}]"), &reduce_mod(&q_binomial_poly(p as u32, k), p)?, &want);
    }
    for k in 0..p as u32 {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let want = ModElem::monomial(p, sign, -choose2(k as i64 + 1));
        v = expect_eq(v, &format!("[p-1,{k}]"), &reduce_mod(&q_binomial_poly(p as u32 - 1, k), p)?, &want);
    }

    let mut lhs = vec![one.clone()];
    for i in 1..p as i64 {
        lhs = xpoly_mul_linear(&lhs, &one, &ModElem::monomial(p, -1, i));
    }
    v = expect_xpoly(v, "(1-qx)^(p-1)", &lhs, &vec![one.clone(); p as usize]);

    let mut lhs = vec![one.clone()];
    for i in 0..p as i64 {
        lhs = xpoly_mul_linear(&lhs, &one, &ModElem::monomial(p, 1, i));
    }
    let mut want = vec![ModElem::zero(p); p as usize + 1];
    want[0] = one.clone();
    want[p as usize] = one.clone();
    v = expect_xpoly(v, "(1+x)^p", &lhs, &want);

    let roots = if p % 4 == 1 { sqrt_minus_one(p) } else { Vec::new() };
    for &a in &roots {
        let ai = a as i64;
        let prod = ModElem::q_int(p, a, -1 - ai).mul(&ModElem::q_int(p, a, -1 + ai));
        v = expect_eq(v, &format!("a={a}: product = -q^(1-a)"), &prod, &ModElem::monomial(p, -1, 1 - ai));
    }
    if !v.is_pass() {
        return Ok(v);
    }
    let mut v = v.passed(format!("all sub-checks, square roots of -1: {roots:?}"));
    if !roots.is_empty() {
        v = v.param("sign_convention", "-q^(1-a)");
    }
    Ok(v)
}

/// `prod_{k=1}^{p-1} (y - q^k) ≡ 1 + y + ... + y^{p-1} (mod [p])`, coefficientwise in `y`.
pub fn root_product_check(p: u64) -> Result<Verdict> {
    check_odd_prime(p)?;
    let one = ModElem::one(p);
    let mut lhs = vec![one.clone()];
    for k in 1..p as i64 {
        lhs = xpoly_mul_linear(&lhs, &ModElem::monomial(p, -1, k), &one);
    }
    let v = Verdict::new("root-product", Mode::Congruence).param("p", p);
    let v = expect_xpoly(v, "prod (y - q^k)", &lhs, &vec![one; p as usize]);
    Ok(if v.is_pass() { v.passed("coefficients y^0..y^(p-1)") } else { v })
}

/// `chi_p = phi_p / psi_p` with `phi_p = prod_{k=1}^{p-1} (y^k - 1) - p`
/// and `psi_p = 1 + y + ... + y^{p-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChiPolynomial {
    pub p: u64,
    pub poly: QLaurent,
}

impl ChiPolynomial {
    pub fn degree(&self) -> i64 {
        self.poly.max_exponent().unwrap_or(0)
    }

    pub fn coefficients(&self) -> Vec<BigInt> {
        self.poly.coeffs().iter().map(|c| c.to_integer()).collect()
    }
}

impl fmt::Display for ChiPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.poly)
    }
}

pub fn phi_poly(p: u64) -> QLaurent {
    let prod = (1..p as i64).fold(QLaurent::one().with_var('y'), |acc, k| {
        &acc * &(&QLaurent::var_pow('y', k) - &QLaurent::one().with_var('y'))
    });
    &prod - &QLaurent::constant_in(BigRat::from_integer(p.into()), 'y')
}

pub fn psi_poly(p: u64) -> QLaurent {
    qn(p as i64).with_var('y')
}

/// Exact quotient `phi_p / psi_p`; `p = 2` leaves remainder `-4`.
pub fn chi_poly(p: u64) -> Result<ChiPolynomial> {
    check_prime(p)?;
    let poly = phi_poly(p).div_exact(&psi_poly(p))?;
    debug_assert!(poly.coeffs().iter().all(|c| c.is_integer() && !c.denom().is_negative()));
    Ok(ChiPolynomial { p, poly })
}
