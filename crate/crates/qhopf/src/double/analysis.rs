use crate::exactnum::Field;
use crate::intcoint::{cointegral_space, integral_space, Side};
use crate::multilinear::{Functional, TensorElement};
use crate::qha::sweedler::{si, Sw};
use crate::qha::{lhit, two_sided_hit, QhaPresentation, ReportRow, VerificationReport};
use crate::w;

use super::{build_double, DoubleError, DoublePresentation};

/// Whether `b = k·a` for some nonzero `k`, with `a ≠ 0`.
pub(crate) fn proportional<F: Field>(a: &[F], b: &[F]) -> bool {
    let Some(i) = a.iter().position(|x| !x.is_zero()) else {
        return false;
    };
    let Ok(k) = b[i].div(&a[i]) else {
        return false;
    };
    !k.is_zero() && a.iter().zip(b).all(|(x, y)| x.times(&k) == *y)
}

fn spans_line<F: Field>(name: &str, found: &[Vec<F>], candidate: &[F]) -> ReportRow<F> {
    let ok = found.len() == 1 && proportional(candidate, &found[0]);
    ReportRow::check(name, ok, format!("solver dimension {}", found.len()))
}

/// `𝕋 = μ⁻¹(δ²)δ¹⇀λ ⋈ r` and its checks.
pub fn double_integral<F: Field>(
    h: &QhaPresentation<F>,
    d: &DoublePresentation<F>,
) -> Result<(TensorElement<F>, VerificationReport<F>), DoubleError> {
    let c = h.canonical()?;
    let ints = h.integrals()?;
    let co = h.cointegrals()?;
    let dd = &d.presentation;
    let shift = c.delta.contract(&ints.mu_inv, 1)?;
    let big_t = lhit(h, &shift, &co.left);
    let r = &ints.right;
    let integral = d.bowtie(&big_t, r);

    let mut rep = VerificationReport::new(format!("integral of {}", dd.name()));
    let expected = ints.mu_inv.eval(h.beta()).times(&co.left.eval(r));
    let value = big_t.eval(r);
    rep.push(ReportRow::check(
        "double_integral_nonzero",
        value == expected && !value.is_zero(),
        format!("T(r) = {value}"),
    ));
    let eps_d = dd.counit();
    let mut left_ok = true;
    let mut right_ok = true;
    for i in 0..dd.dim() {
        let b = dd.basis(i);
        let scaled = integral.scale(&eps_d.at(i));
        left_ok &= dd.mul(&b, &integral) == scaled;
        right_ok &= dd.mul(&integral, &b) == scaled;
    }
    rep.push(ReportRow::check("double_integral_left", left_ok, format!("{} basis elements", dd.dim())));
    rep.push(ReportRow::check("double_integral_right", right_ok, format!("{} basis elements", dd.dim())));
    let found: Vec<Vec<F>> = integral_space(dd, Side::Left).iter().map(|t| t.coords()).collect();
    rep.push(spans_line("double_integral_spans_solver_line", &found, &integral.coords()));
    let mu_d = &dd.integrals()?.mu;
    rep.push(ReportRow::compare("double_unimodular", &mu_d.as_tensor(), &eps_d.as_tensor()));
    if ints.is_unimodular(h) {
        rep.push(ReportRow::compare("unimodular_shift_is_beta", &shift, h.beta()));
    }
    Ok((integral, rep))
}

/// `Γ` (left) and `t⋈λ∘S` (right) on `D(H)`.
pub struct DoubleCointegrals<F> {
    pub left: Functional<F>,
    pub right: Functional<F>,
}

/// `Γ = r ⋈ μ(p̃¹)S(p̃²)⇀λ↼μ⁻¹(f¹)S⁻¹(f²)` and `t⋈λ∘S`, with their checks.
pub fn double_cointegrals<F: Field>(
    h: &QhaPresentation<F>,
    d: &DoublePresentation<F>,
) -> Result<(DoubleCointegrals<F>, VerificationReport<F>), DoubleError> {
    let c = h.canonical()?;
    let ints = h.integrals()?;
    let co = h.cointegrals()?;
    let dd = &d.presentation;
    let a = c.p_l.contract(&ints.mu, 0)?;
    let a = h.s(&a);
    let b = h.s_inv(&c.f.contract(&ints.mu_inv, 0)?)?;
    let psi = two_sided_hit(h, &a, &co.left, &b);
    let gamma = d.dual_pair(&ints.right, &psi);
    let lambda_s = co.left.compose(h.antipode());
    let right = d.dual_pair(&ints.left, &lambda_s);

    let mut rep = VerificationReport::new(format!("cointegrals of {}", dd.name()));
    let left_line: Vec<Vec<F>> = cointegral_space(dd, Side::Left)?.iter().map(|f| f.coords().to_vec()).collect();
    let right_line: Vec<Vec<F>> = cointegral_space(dd, Side::Right)?.iter().map(|f| f.coords().to_vec()).collect();
    rep.push(spans_line("double_left_cointegral_spans_solver_line", &left_line, gamma.coords()));
    rep.push(spans_line("double_right_cointegral_spans_solver_line", &right_line, right.coords()));
    let s_r = h.s(&ints.right);
    rep.push(ReportRow::compare(
        "double_left_cointegral_after_antipode",
        &gamma.compose(dd.antipode()).as_tensor(),
        &d.dual_pair(&s_r, &lambda_s).as_tensor(),
    ));
    Ok((DoubleCointegrals { left: gamma, right }, rep))
}

/// Both displayed formulas for the modular element of `D(H)`.
pub struct DoubleModular<F> {
    pub first: TensorElement<F>,
    pub second: TensorElement<F>,
}

/// `g_D = μ(g¹₁)μ⁻¹(g²)S_D⁻¹(μ⋈g¹₂S⁻²(g⁻¹))`
/// `    = μ(q̃¹g¹)μ⁻¹(p̃¹)(ε⋈S⁻³(g⁻¹))(μ⁻¹⋈(S⁻¹(q̃²g²)↼μ⁻¹)p̃²)`.
pub fn double_modular<F: Field>(
    h: &QhaPresentation<F>,
    d: &DoublePresentation<F>,
) -> Result<(DoubleModular<F>, VerificationReport<F>), DoubleError> {
    let c = h.canonical()?;
    let ints = h.integrals()?;
    let co = h.cointegrals()?;
    let dd = &d.presentation;
    let (mu, mu_inv) = (&ints.mu, &ints.mu_inv);

    let s2 = h.antipode_power(-2)?;
    let s2gi = s2.apply(&co.g_inv);
    let mut sw = Sw::new(h);
    let (g1, g2) = sw.put2(&c.f_inv);
    let (g11, g12) = sw.split(g1);
    sw.scalar(mu, w![g11]);
    sw.scalar(mu_inv, w![g2]);
    let z = sw.word(w![g12, &s2gi]);
    let z = sw.finish(&[z]);
    let first = d.antipode_inverse.apply(&d.bowtie(mu, &z));

    let s3gi = h.antipode_power(-3)?.apply(&co.g_inv);
    let mut sw = Sw::new(h);
    let (q1, q2) = sw.put2(&c.q_l);
    let (g1, g2) = sw.put2(&c.f_inv);
    let (p1, p2) = sw.put2(&c.p_l);
    sw.scalar(mu, w![q1, g1]);
    sw.scalar(mu_inv, w![p1]);
    let m = sw.word(w![si(w![q2, g2])]);
    let (m1, m2) = sw.split(m);
    sw.scalar(mu_inv, w![m1]);
    let out = sw.word(w![m2, p2]);
    let wv = sw.finish(&[out]);
    let second = dd.mul(&d.embed(&s3gi), &d.bowtie(mu_inv, &wv));

    let mut rep = VerificationReport::new(format!("modular element of {}", dd.name()));
    rep.push(ReportRow::compare("double_modular_displays_agree", &first, &second));
    let own = &dd.cointegrals()?.g;
    rep.push(ReportRow::compare("double_modular_matches_solver", &first, own));
    Ok((DoubleModular { first, second }, rep))
}

/// Inputs of the semisimplicity criterion for `D(H)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Semisimplicity<F> {
    /// `ε(r)`.
    pub counit_of_right_integral: F,
    /// `λ(S⁻¹(α)β)`.
    pub normalized_cointegral: F,
    /// `ε_D(𝕋)`.
    pub counit_of_double_integral: F,
    pub semisimple: bool,
}

/// `D(H)` is semisimple iff `ε(r) ≠ 0` and `λ(S⁻¹(α)β) ≠ 0`, equivalently
/// `ε_D(𝕋) ≠ 0`.
pub fn semisimplicity_check<F: Field>(
    h: &QhaPresentation<F>,
    d: &DoublePresentation<F>,
    integral: &TensorElement<F>,
) -> Result<(Semisimplicity<F>, VerificationReport<F>), DoubleError> {
    let ints = h.integrals()?;
    let co = h.cointegrals()?;
    let eps_r = h.eps(&ints.right);
    let x = h.mul(&h.s_inv(h.alpha())?, h.beta());
    let normalized = co.left.eval(&x);
    let eps_t = d.presentation.counit().eval(integral);
    let semisimple = !eps_r.is_zero() && !normalized.is_zero();
    let verdict = Semisimplicity {
        counit_of_right_integral: eps_r.clone(),
        normalized_cointegral: normalized.clone(),
        counit_of_double_integral: eps_t.clone(),
        semisimple,
    };
    let mut rep = VerificationReport::new(format!("semisimplicity of {}", d.presentation.name()));
    rep.push(ReportRow::check(
        "semisimplicity_criteria_agree",
        semisimple == !eps_t.is_zero(),
        format!(
            "ε(r) = {}, λ(S⁻¹(α)β) = {}, ε_D(T) = {}, {}",
            eps_r,
            normalized,
            eps_t,
            if semisimple { "semisimple" } else { "not semisimple" }
        ),
    ));
    Ok((verdict, rep))
}

/// `i_D` is an injective morphism of quasi-Hopf algebras, and the closed
/// form of `S_D⁻¹` inverts `S_D`.
pub fn embedding_rows<F: Field>(h: &QhaPresentation<F>, d: &DoublePresentation<F>) -> Result<Vec<ReportRow<F>>, DoubleError> {
    let dd = &d.presentation;
    let n = h.dim();
    let mut mult_ok = true;
    for i in 0..n {
        for j in 0..n {
            let (a, b) = (h.basis(i), h.basis(j));
            mult_ok &= d.embed(&h.mul(&a, &b)) == dd.mul(&d.embed(&a), &d.embed(&b));
        }
    }
    let mut delta_ok = true;
    let mut s_ok = true;
    let mut eps_ok = true;
    let mut sinv_ok = true;
    let sinv = h.antipode_inverse()?;
    for i in 0..n {
        let a = h.basis(i);
        let ia = d.embed(&a);
        delta_ok &= dd.delta(&ia) == d.embed_tensor(&h.delta(&a));
        s_ok &= dd.s(&ia) == d.embed(&h.s(&a));
        eps_ok &= dd.eps(&ia) == h.eps(&a);
        sinv_ok &= d.antipode_inverse.apply(&ia) == d.embed(&sinv.apply(&a));
    }
    let mut unit_ok = true;
    for i in 0..dd.dim() {
        let b = dd.basis(i);
        unit_ok &= dd.mul(dd.unit(), &b) == b && dd.mul(&b, dd.unit()) == b;
    }
    let matrix_inv = dd.antipode_inverse()?;
    Ok(vec![
        ReportRow::check("embedding_multiplicative", mult_ok, format!("{} pairs", n * n)),
        ReportRow::check("embedding_comultiplicative", delta_ok, format!("{n} elements")),
        ReportRow::check("embedding_antipode", s_ok, format!("{n} elements")),
        ReportRow::check("embedding_counit", eps_ok, format!("{n} elements")),
        ReportRow::compare("embedding_reassociator", dd.phi(), &d.embed_tensor(h.phi())),
        ReportRow::check("double_unit_law", unit_ok, format!("{} elements", dd.dim())),
        ReportRow::check("double_antipode_inverse_on_embedding", sinv_ok, format!("{n} elements")),
        ReportRow::check(
            "double_antipode_inverse_closed_form",
            d.antipode_inverse == *matrix_inv,
            "closed form against matrix inverse",
        ),
    ])
}

/// Builds `D(H)` and runs every check on it.
pub fn double_suite<F: Field>(h: &QhaPresentation<F>) -> Result<(DoublePresentation<F>, VerificationReport<F>), DoubleError> {
    let d = build_double(h)?;
    let mut rep = VerificationReport::new(format!("quantum double of {}", h.name()));
    rep.extend(d.axioms.clone());
    for row in embedding_rows(h, &d)? {
        rep.push(row);
    }
    let (integral, r) = double_integral(h, &d)?;
    rep.extend(r);
    rep.extend(double_cointegrals(h, &d)?.1);
    rep.extend(double_modular(h, &d)?.1);
    rep.extend(semisimplicity_check(h, &d, &integral)?.1);
    Ok((d, rep))
}
