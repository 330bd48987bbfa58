use std::sync::Arc;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::exactnum::Field;
use crate::intcoint::{CointegralData, IntegralData};
use crate::multilinear::TensorElement;
use crate::qha::sweedler::{s, si, sp, Leg, Sw};
use crate::qha::{QhaPresentation, ReportRow};
use crate::w;

use super::{CanonicalElements, CanonicalError};

type Sides<F> = (TensorElement<F>, TensorElement<F>);
type Eval<F> = fn(&Ctx<'_, F>, &[Arg]) -> Result<Vec<Sides<F>>, CanonicalError>;

/// What an identity needs beyond the canonical elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Needs {
    Canonical,
    Integrals,
    Cointegrals,
}

/// A free variable of an identity: either every basis element at once
/// (an extra label leg in front of the result) or one fixed basis element.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Arg {
    Label,
    Basis(usize),
}

/// One registered identity.
pub struct Identity<F> {
    pub name: &'static str,
    pub statement: &'static str,
    pub needs: Needs,
    /// Number of free algebra variables.
    pub arity: usize,
    eval: Eval<F>,
}

pub(crate) struct Ctx<'a, F> {
    h: &'a QhaPresentation<F>,
    c: Arc<CanonicalElements<F>>,
}

impl<'a, F: Field> Ctx<'a, F> {
    fn ints(&self) -> Result<Arc<IntegralData<F>>, CanonicalError> {
        self.h.integrals().map_err(|e| CanonicalError::Prerequisite(e.to_string()))
    }

    fn co(&self) -> Result<Arc<CointegralData<F>>, CanonicalError> {
        self.h.cointegrals().map_err(|e| CanonicalError::Prerequisite(e.to_string()))
    }

    fn sw(&self) -> Sw<'a, F> {
        Sw::new(self.h)
    }
}

/// Collects label legs so both sides order their free legs identically,
/// whatever order the arguments are opened in.
struct Io {
    labels: Vec<(usize, Leg)>,
}

impl Io {
    fn new() -> Io {
        Io { labels: Vec::new() }
    }

    fn arg<F: Field>(&mut self, sw: &mut Sw<'_, F>, h: &QhaPresentation<F>, a: Arg) -> Leg {
        let slot = self.labels.len();
        self.arg_at(sw, h, a, slot)
    }

    fn arg_at<F: Field>(&mut self, sw: &mut Sw<'_, F>, h: &QhaPresentation<F>, a: Arg, slot: usize) -> Leg {
        match a {
            Arg::Label => {
                let (l, e) = sw.label();
                self.labels.push((slot, l));
                e
            }
            Arg::Basis(i) => sw.put1(&h.basis(i)),
        }
    }

    fn finish<F: Field>(mut self, sw: Sw<'_, F>, outs: &[Leg]) -> TensorElement<F> {
        self.labels.sort_by_key(|&(slot, _)| slot);
        let mut order: Vec<Leg> = self.labels.into_iter().map(|(_, l)| l).collect();
        order.extend_from_slice(outs);
        sw.finish(&order)
    }
}

fn ok<F>(pairs: Vec<Sides<F>>) -> Result<Vec<Sides<F>>, CanonicalError> {
    Ok(pairs)
}

// ---------------------------------------------------------------- twist

fn ca<F: Field>(cx: &Ctx<'_, F>, a: &[Arg]) -> Result<Vec<Sides<F>>, CanonicalError> {
    let (h, c) = (cx.h, &cx.c);
    let mut sw = cx.sw();
    let mut io = Io::new();
    let e = io.arg(&mut sw, h, a[0]);
    let (f1, f2) = sw.put2(&c.f);
    let (g1, g2) = sw.put2(&c.f_inv);
    let se = sw.word(w![s(w![e])]);
    let (se1, se2) = sw.split(se);
    let l = sw.word(w![f1, se1, g1]);
    let r = sw.word(w![f2, se2, g2]);
    let lhs = io.finish(sw, &[l, r]);
    let mut sw = cx.sw();
    let mut io = Io::new();
    let e = io.arg(&mut sw, h, a[0]);
    let (e1, e2) = sw.split(e);
    let l = sw.word(w![s(w![e2])]);
    let r = sw.word(w![s(w![e1])]);
    ok(vec![(lhs, io.finish(sw, &[l, r]))])
}

fn twist_counit<F: Field>(cx: &Ctx<'_, F>, _: &[Arg]) -> Result<Vec<Sides<F>>, CanonicalError> {
    let (h, c) = (cx.h, &cx.c);
    let eps = h.counit();
    ok(vec![
        (c.f.contract(eps, 0)?, h.unit().clone()),
        (c.f.contract(eps, 1)?, h.unit().clone()),
        (c.f_inv.contract(eps, 0)?, h.unit().clone()),
        (c.f_inv.contract(eps, 1)?, h.unit().clone()),
    ])
}

fn gdf<F: Field>(cx: &Ctx<'_, F>, _: &[Arg]) -> Result<Vec<Sides<F>>, CanonicalError> {
    let (h, c) = (cx.h, &cx.c);
    ok(vec![
        (h.mul(&c.f, &h.delta(h.alpha())), c.gamma.clone()),
        (h.mul(&h.delta(h.beta()), &c.f_inv), c.delta.clone()),
    ])
}

fn pf<F: Field>(cx: &Ctx<'_, F>, _: &[Arg]) -> Result<Vec<Sides<F>>, CanonicalError> {
    let (h, c) = (cx.h, &cx.c);
    let mut sw = cx.sw();
    let (f1, f2) = sw.put2(&c.f);
    let (ff1, ff2) = sw.put2(&c.f);
    let (x1, x2, x3) = sw.put3(h.phi());
    let (f21, f22) = sw.split(f2);
    let a = sw.word(w![f1, x1]);
    let b = sw.word(w![ff1, f21, x2]);
    let d = sw.word(w![ff2, f22, x3]);
    let lhs = sw.finish(&[a, b, d]);
    let mut sw = cx.sw();
    let (f1, f2) = sw.put2(&c.f);
    let (ff1, ff2) = sw.put2(&c.f);
    let (x1, x2, x3) = sw.put3(h.phi());
    let (ff11, ff12) = sw.split(ff1);
    let a = sw.word(w![s(w![x3]), f1, ff11]);
    let b = sw.word(w![s(w![x2]), f2, ff12]);
    let d = sw.word(w![s(w![x1]), ff2]);
    ok(vec![(lhs, sw.finish(&[a, b, d]))])
}

fn fgab<F: Field>(cx: &Ctx<'_, F>, _: &[Arg]) -> Result<Vec<Sides<F>>, CanonicalError> {
    let (h, c) = (cx.h, &cx.c);
    let (alpha, beta) = (h.alpha(), h.beta());
    let one_leg = |t: &TensorElement<F>, build: &dyn Fn(&mut Sw<'_, F>, Leg, Leg) -> Leg| {
        let mut sw = cx.sw();
        let (a, b) = sw.put2(t);
        let out = build(&mut sw, a, b);
        sw.finish(&[out])
    };
    ok(vec![
        (one_leg(&c.f_inv, &|sw, g1, g2| sw.word(w![g1, s(w![g2, alpha])])), beta.clone()),
        (one_leg(&c.f, &|sw, f1, f2| sw.word(w![s(w![beta, f1]), f2])), alpha.clone()),
        (one_leg(&c.f, &|sw, f1, f2| sw.word(w![f1, beta, s(w![f2])])), h.s(alpha)),
        (one_leg(&c.f, &|sw, f1, f2| sw.word(w![si(w![f2]), beta, f1])), h.s_inv(alpha)?),
    ])
}

// ------------------------------------------------------------ p and q

fn qr1<F: Field>(cx: &Ctx<'_, F>, a: &[Arg]) -> Result<Vec<Sides<F>>, CanonicalError> {
    let (h, c) = (cx.h, &cx.c);
    let mut sw = cx.sw();
    let mut io = Io::new();
    let e = io.arg(&mut sw, h, a[0]);
    let (p1, p2) = sw.put2(&c.p_r);
    let (e1, e2) = sw.split(e);
    let (e11, e12) = sw.split(e1);
    let l = sw.word(w![e11, p1]);
    let r = sw.word(w![e12, p2, s(w![e2])]);
    let lhs = io.finish(sw, &[l, r]);
    let mut sw = cx.sw();
    let mut io = Io::new();
    let e = io.arg(&mut sw, h, a[0]);
    let (p1, p2) = sw.put2(&c.p_r);
    let l = sw.word(w![p1, e]);
    ok(vec![(lhs, io.finish(sw, &[l, p2]))])
}

fn qr1a<F: Field>(cx: &Ctx<'_, F>, a: &[Arg]) -> Result<Vec<Sides<F>>, CanonicalError> {
    let (h, c) = (cx.h, &cx.c);
    let mut sw = cx.sw();
    let mut io = Io::new();
    let e = io.arg(&mut sw, h, a[0]);
    let (q1, q2) = sw.put2(&c.q_r);
    let (e1, e2) = sw.split(e);
    let (e11, e12) = sw.split(e1);
    let l = sw.word(w![q1, e11]);
    let r = sw.word(w![si(w![e2]), q2, e12]);
    let lhs = io.finish(sw, &[l, r]);
    let mut sw = cx.sw();
    let mut io = Io::new();
    let e = io.arg(&mut sw, h, a[0]);
    let (q1, q2) = sw.put2(&c.q_r);
    let l = sw.word(w![e, q1]);
    ok(vec![(lhs, io.finish(sw, &[l, q2]))])
}

fn ql1<F: Field>(cx: &Ctx<'_, F>, a: &[Arg]) -> Result<Vec<Sides<F>>, CanonicalError> {
    let (h, c) = (cx.h, &cx.c);
    let mut sw = cx.sw();
    let mut io = Io::new();
    let e = io.arg(&mut sw, h, a[0]);
    let (p1, p2) = sw.put2(&c.p_l);
    let (e1, e2) = sw.split(e);
    let (e21, e22) = sw.split(e2);
    let l = sw.word(w![e21, p1, si(w![e1])]);
    let r = sw.word(w![e22, p2]);
    let lhs = io.finish(sw, &[l, r]);
    let mut sw = cx.sw();
    let mut io = Io::new();
    let e = io.arg(&mut sw, h, a[0]);
    let (p1, p2) = sw.put2(&c.p_l);
    let r = sw.word(w![p2, e]);
    ok(vec![(lhs, io.finish(sw, &[p1, r]))])
}

fn ql1a<F: Field>(cx: &Ctx<'_, F>, a: &[Arg]) -> Result<Vec<Sides<F>>, CanonicalError> {
    let (h, c) = (cx.h, &cx.c);
    let mut sw = cx.sw();
    let mut io = Io::new();
    let e = io.arg(&mut sw, h, a[0]);
    let (q1, q2) = sw.put2(&c.q_l);
    let (e1, e2) = sw.split(e);
    let (e21, e22) = sw.split(e2);
    let l = sw.word(w![s(w![e1]), q1, e21]);
    let r = sw.word(w![q2, e22]);
    let lhs = io.finish(sw, &[l, r]);
    let mut sw = cx.sw();
    let mut io = Io::new();
    let e = io.arg(&mut sw, h, a[0]);
    let (q1, q2) = sw.put2(&c.q_l);
    let r = sw.word(w![e, q2]);
    ok(vec![(lhs, io.finish(sw, &[q1, r]))])
}

fn pq_pairs<F: Field>(cx: &Ctx<'_, F>, _: &[Arg]) -> Result<Vec<Sides<F>>, CanonicalError> {
    let c = &cx.c;
    let one = cx.h.one(2);
    let mut out = Vec::new();
    let mut sw = cx.sw();
    let (q1, q2) = sw.put2(&c.q_r);
    let (p1, p2) = sw.put2(&c.p_r);
    let (p11, p12) = sw.split(p1);
    let l = sw.word(w![q1, p11]);
    let r = sw.word(w![si(w![p2]), q2, p12]);
    out.push((sw.finish(&[l, r]), one.clone()));
    let mut sw = cx.sw();
    let (q1, q2) = sw.put2(&c.q_r);
    let (p1, p2) = sw.put2(&c.p_r);
    let (q11, q12) = sw.split(q1);
    let l = sw.word(w![q11, p1]);
    let r = sw.word(w![q12, p2, s(w![q2])]);
    out.push((sw.finish(&[l, r]), one.clone()));
    let mut sw = cx.sw();
    let (q1, q2) = sw.put2(&c.q_l);
    let (p1, p2) = sw.put2(&c.p_l);
    let (p21, p22) = sw.split(p2);
    let l = sw.word(w![s(w![p1]), q1, p21]);
    let r = sw.word(w![q2, p22]);
    out.push((sw.finish(&[l, r]), one.clone()));
    let mut sw = cx.sw();
    let (q1, q2) = sw.put2(&c.q_l);
    let (p1, p2) = sw.put2(&c.p_l);
    let (q21, q22) = sw.split(q2);
    let l = sw.word(w![q21, p1, si(w![q1])]);
    let r = sw.word(w![q22, p2]);
    out.push((sw.finish(&[l, r]), one));
    Ok(out)
}

fn pr1<F: Field>(cx: &Ctx<'_, F>, _: &[Arg]) -> Result<Vec<Sides<F>>, CanonicalError> {
    let (h, c) = (cx.h, &cx.c);
    let mut sw = cx.sw();
    let (x1, x2, x3) = sw.put3(h.phi());
    let (p1, p2) = sw.put2(&c.p_r);
    let (pp1, pp2) = sw.put2(&c.p_r);
    let (p11, p12) = sw.split(p1);
    let a = sw.word(w![x1, p11, pp1]);
    let b = sw.word(w![x2, p12, pp2]);
    let d = sw.word(w![x3, p2]);
    let lhs = sw.finish(&[a, b, d]);
    let mut sw = cx.sw();
    let (y1, y2, y3) = sw.put3(h.phi_inv());
    let (p1, p2) = sw.put2(&c.p_r);
    let (g1, g2) = sw.put2(&c.f_inv);
    let (y11, y12) = sw.split(y1);
    let (y121, y122) = sw.split(y12);
    let (p21, p22) = sw.split(p2);
    let a = sw.word(w![y11, p1]);
    let b = sw.word(w![y121, p21, g1, s(w![y3])]);
    let d = sw.word(w![y122, p22, g2, s(w![y2])]);
    ok(vec![(lhs, sw.finish(&[a, b, d]))])
}

fn qr2<F: Field>(cx: &Ctx<'_, F>, _: &[Arg]) -> Result<Vec<Sides<F>>, CanonicalError> {
    let (h, c) = (cx.h, &cx.c);
    let mut sw = cx.sw();
    let (q1, q2) = sw.put2(&c.q_r);
    let (qq1, qq2) = sw.put2(&c.q_r);
    let (y1, y2, y3) = sw.put3(h.phi_inv());
    let (qq11, qq12) = sw.split(qq1);
    let a = sw.word(w![q1, qq11, y1]);
    let b = sw.word(w![q2, qq12, y2]);
    let d = sw.word(w![qq2, y3]);
    let lhs = sw.finish(&[a, b, d]);
    let mut sw = cx.sw();
    let (q1, q2) = sw.put2(&c.q_r);
    let (x1, x2, x3) = sw.put3(h.phi());
    let (f1, f2) = sw.put2(&c.f);
    let (x11, x12) = sw.split(x1);
    let (x121, x122) = sw.split(x12);
    let (q21, q22) = sw.split(q2);
    let a = sw.word(w![q1, x11]);
    let b = sw.word(w![si(w![f2, x3]), q21, x121]);
    let d = sw.word(w![si(w![f1, x2]), q22, x122]);
    ok(vec![(lhs, sw.finish(&[a, b, d]))])
}

fn pl1<F: Field>(cx: &Ctx<'_, F>, _: &[Arg]) -> Result<Vec<Sides<F>>, CanonicalError> {
    let (h, c) = (cx.h, &cx.c);
    let mut sw = cx.sw();
    let (y1, y2, y3) = sw.put3(h.phi_inv());
    let (p1, p2) = sw.put2(&c.p_l);
    let (pp1, pp2) = sw.put2(&c.p_l);
    let (p21, p22) = sw.split(p2);
    let a = sw.word(w![y1, p1]);
    let b = sw.word(w![y2, p21, pp1]);
    let d = sw.word(w![y3, p22, pp2]);
    let lhs = sw.finish(&[a, b, d]);
    let mut sw = cx.sw();
    let (x1, x2, x3) = sw.put3(h.phi());
    let (p1, p2) = sw.put2(&c.p_l);
    let (g1, g2) = sw.put2(&c.f_inv);
    let (x31, x32) = sw.split(x3);
    let (x311, x312) = sw.split(x31);
    let (p11, p12) = sw.split(p1);
    let a = sw.word(w![x311, p11, si(w![x2, g2])]);
    let b = sw.word(w![x312, p12, si(w![x1, g1])]);
    let d = sw.word(w![x32, p2]);
    ok(vec![(lhs, sw.finish(&[a, b, d]))])
}

fn ql2<F: Field>(cx: &Ctx<'_, F>, _: &[Arg]) -> Result<Vec<Sides<F>>, CanonicalError> {
    let (h, c) = (cx.h, &cx.c);
    let mut sw = cx.sw();
    let (qq1, qq2) = sw.put2(&c.q_l);
    let (q1, q2) = sw.put2(&c.q_l);
    let (x1, x2, x3) = sw.put3(h.phi());
    let (qq21, qq22) = sw.split(qq2);
    let a = sw.word(w![qq1, x1]);
    let b = sw.word(w![q1, qq21, x2]);
    let d = sw.word(w![q2, qq22, x3]);
    let lhs = sw.finish(&[a, b, d]);
    let mut sw = cx.sw();
    let (y1, y2, y3) = sw.put3(h.phi_inv());
    let (f1, f2) = sw.put2(&c.f);
    let (q1, q2) = sw.put2(&c.q_l);
    let (q11, q12) = sw.split(q1);
    let (y31, y32) = sw.split(y3);
    let (y311, y312) = sw.split(y31);
    let a = sw.word(w![s(w![y2]), f1, q11, y311]);
    let b = sw.word(w![s(w![y1]), f2, q12, y312]);
    let d = sw.word(w![q2, y32]);
    ok(vec![(lhs, sw.finish(&[a, b, d]))])
}

// --------------------------------------------------------------- U and V

fn fu1<F: Field>(cx: &Ctx<'_, F>, a: &[Arg]) -> Result<Vec<Sides<F>>, CanonicalError> {
    let (h, c) = (cx.h, &cx.c);
    let mut sw = cx.sw();
    let mut io = Io::new();
    let e = io.arg(&mut sw, h, a[0]);
    let (u1, u2) = sw.put2(&c.u);
    let r = sw.word(w![u2, s(w![e])]);
    let lhs = io.finish(sw, &[u1, r]);
    let mut sw = cx.sw();
    let mut io = Io::new();
    let e = io.arg(&mut sw, h, a[0]);
    let (u1, u2) = sw.put2(&c.u);
    let (e1, e2) = sw.split(e);
    let se = sw.word(w![s(w![e1])]);
    let (se1, se2) = sw.split(se);
    let l = sw.word(w![se1, u1, e2]);
    let r = sw.word(w![se2, u2]);
    ok(vec![(lhs, io.finish(sw, &[l, r]))])
}

fn fv1<F: Field>(cx: &Ctx<'_, F>, a: &[Arg]) -> Result<Vec<Sides<F>>, CanonicalError> {
    let (h, c) = (cx.h, &cx.c);
    let mut sw = cx.sw();
    let mut io = Io::new();
    let e = io.arg(&mut sw, h, a[0]);
    let (v1, v2) = sw.put2(&c.v);
    let r = sw.word(w![si(w![e]), v2]);
    let lhs = io.finish(sw, &[v1, r]);
    let mut sw = cx.sw();
    let mut io = Io::new();
    let e = io.arg(&mut sw, h, a[0]);
    let (v1, v2) = sw.put2(&c.v);
    let (e1, e2) = sw.split(e);
    let se = sw.word(w![si(w![e1])]);
    let (se1, se2) = sw.split(se);
    let l = sw.word(w![e2, v1, se1]);
    let r = sw.word(w![v2, se2]);
    ok(vec![(lhs, io.finish(sw, &[l, r]))])
}

fn qqlv<F: Field>(cx: &Ctx<'_, F>, _: &[Arg]) -> Result<Vec<Sides<F>>, CanonicalError> {
    let c = &cx.c;
    let mut sw = cx.sw();
    let (q1, q2) = sw.put2(&c.q_l);
    let (v1, v2) = sw.put2(&c.v);
    let sq = sw.word(w![si(w![q1])]);
    let (sq1, sq2) = sw.split(sq);
    let l = sw.word(w![q2, v1, sq1]);
    let r = sw.word(w![v2, sq2]);
    ok(vec![(sw.finish(&[l, r]), c.q_r.clone())])
}

fn pplu<F: Field>(cx: &Ctx<'_, F>, _: &[Arg]) -> Result<Vec<Sides<F>>, CanonicalError> {
    let c = &cx.c;
    let mut sw = cx.sw();
    let (p1, p2) = sw.put2(&c.p_l);
    let (u1, u2) = sw.put2(&c.u);
    let sp1 = sw.word(w![s(w![p1])]);
    let (s1, s2) = sw.split(sp1);
    let l = sw.word(w![s1, u1, p2]);
    let r = sw.word(w![s2, u2]);
    ok(vec![(sw.finish(&[l, r]), c.p_r.clone())])
}

fn uv_pq<F: Field>(cx: &Ctx<'_, F>, _: &[Arg]) -> Result<Vec<Sides<F>>, CanonicalError> {
    let c = &cx.c;
    let mut sw = cx.sw();
    let (q1, q2) = sw.put2(&c.q_l);
    let (p1, p2) = sw.put2(&c.p_r);
    let (q11, q12) = sw.split(q1);
    let l = sw.word(w![q11, p1]);
    let r = sw.word(w![q12, p2, s(w![q2])]);
    let u = sw.finish(&[l, r]);
    let mut sw = cx.sw();
    let (q1, q2) = sw.put2(&c.q_r);
    let (p1, p2) = sw.put2(&c.p_l);
    let (p11, p12) = sw.split(p1);
    let l = sw.word(w![q1, p11]);
    let r = sw.word(w![si(w![p2]), q2, p12]);
    let v = sw.finish(&[l, r]);
    ok(vec![(u, c.u.clone()), (v, c.v.clone())])
}

fn u_associator<F: Field>(cx: &Ctx<'_, F>, _: &[Arg]) -> Result<Vec<Sides<F>>, CanonicalError> {
    let (h, c) = (cx.h, &cx.c);
    let mut sw = cx.sw();
    let (y1, y2, y3) = sw.put3(h.phi_inv());
    let (u1, u2) = sw.put2(&c.u);
    let (uu1, uu2) = sw.put2(&c.u);
    let (u21, u22) = sw.split(u2);
    let a = sw.word(w![y1, u1]);
    let b = sw.word(w![y2, u21, uu1]);
    let d = sw.word(w![y3, u22, uu2]);
    let lhs = sw.finish(&[a, b, d]);
    let mut sw = cx.sw();
    let (x1, x2, x3) = sw.put3(h.phi());
    let (u1, u2) = sw.put2(&c.u);
    let sx = sw.word(w![s(w![x1])]);
    let (sx1, sx2) = sw.split(sx);
    let (sx11, sx12) = sw.split(sx1);
    let (u11, u12) = sw.split(u1);
    let a = sw.word(w![sx11, u11, x2]);
    let b = sw.word(w![sx12, u12, x3]);
    let d = sw.word(w![sx2, u2]);
    ok(vec![(lhs, sw.finish(&[a, b, d]))])
}

// ------------------------------------------------------- delta and Phi

fn fdelta_drinfeld<F: Field>(cx: &Ctx<'_, F>, a: &[Arg]) -> Result<Vec<Sides<F>>, CanonicalError> {
    let (h, c) = (cx.h, &cx.c);
    let mut sw = cx.sw();
    let mut io = Io::new();
    let e = io.arg(&mut sw, h, a[0]);
    let (d1, d2) = sw.put2(&c.delta);
    let (e1, e2) = sw.split(e);
    let (e11, e12) = sw.split(e1);
    let (e21, e22) = sw.split(e2);
    let l = sw.word(w![e11, d1, s(w![e22])]);
    let r = sw.word(w![e12, d2, s(w![e21])]);
    let lhs = io.finish(sw, &[l, r]);
    let mut sw = cx.sw();
    let mut io = Io::new();
    let e = io.arg(&mut sw, h, a[0]);
    sw.scalar(h.counit(), w![e]);
    let (d1, d2) = sw.put2(&c.delta);
    ok(vec![(lhs, io.finish(sw, &[d1, d2]))])
}

fn delta_phi<F: Field>(cx: &Ctx<'_, F>, _: &[Arg]) -> Result<Vec<Sides<F>>, CanonicalError> {
    let (h, c) = (cx.h, &cx.c);
    let mut sw = cx.sw();
    let (x1, x2, x3) = sw.put3(h.phi());
    let (d1, d2) = sw.put2(&c.delta);
    let (x31, x32) = sw.split(x3);
    let l = sw.word(w![x1, d1, s(w![x32])]);
    let r = sw.word(w![x2, d2, s(w![x31])]);
    let lhs = sw.finish(&[l, r]);
    let mut sw = cx.sw();
    let (p1, p2) = sw.put2(&c.p_l);
    let l = sw.word(w![h.beta(), s(w![p2])]);
    let r = sw.word(w![s(w![p1])]);
    ok(vec![(lhs, sw.finish(&[l, r]))])
}

fn p_left_phi<F: Field>(cx: &Ctx<'_, F>, _: &[Arg]) -> Result<Vec<Sides<F>>, CanonicalError> {
    let (h, c) = (cx.h, &cx.c);
    let mut sw = cx.sw();
    let (z1, z2, z3) = sw.put3(h.phi_inv());
    let (p1, p2) = sw.put2(&c.p_l);
    let (p21, p22) = sw.split(p2);
    let a = sw.word(w![z1, p1]);
    let b = sw.word(w![z2, p21]);
    let d = sw.word(w![z3, p22]);
    let lhs = sw.finish(&[a, b, d]);
    let mut sw = cx.sw();
    let (y1, y2, y3) = sw.put3(h.phi());
    let (z1, z2, z3) = sw.put3(h.phi());
    let (y21, y22) = sw.split(y2);
    let a = sw.word(w![y21, z2, si(w![y1, z1, h.beta()])]);
    let b = sw.word(w![y22, z3]);
    ok(vec![(lhs, sw.finish(&[a, b, y3]))])
}

fn q_right_phi<F: Field>(cx: &Ctx<'_, F>, _: &[Arg]) -> Result<Vec<Sides<F>>, CanonicalError> {
    let (h, c) = (cx.h, &cx.c);
    let mut sw = cx.sw();
    let (x1, x2, x3) = sw.put3(h.phi());
    let (q1, q2) = sw.put2(&c.q_r);
    let (x21, x22) = sw.split(x2);
    let b = sw.word(w![q1, x21]);
    let d = sw.word(w![si(w![x3]), q2, x22]);
    let lhs = sw.finish(&[x1, b, d]);
    let mut sw = cx.sw();
    let (q1, q2) = sw.put2(&c.q_r);
    let (y1, y2, y3) = sw.put3(h.phi_inv());
    let (q11, q12) = sw.split(q1);
    let a = sw.word(w![q11, y1]);
    let b = sw.word(w![q12, y2]);
    let d = sw.word(w![q2, y3]);
    ok(vec![(lhs, sw.finish(&[a, b, d]))])
}

fn p_right_phi<F: Field>(cx: &Ctx<'_, F>, _: &[Arg]) -> Result<Vec<Sides<F>>, CanonicalError> {
    let (h, c) = (cx.h, &cx.c);
    let mut sw = cx.sw();
    let (x1, x2, x3) = sw.put3(h.phi());
    let (p1, p2) = sw.put2(&c.p_r);
    let (p11, p12) = sw.split(p1);
    let a = sw.word(w![x1, p11]);
    let b = sw.word(w![x2, p12]);
    let d = sw.word(w![x3, p2]);
    let lhs = sw.finish(&[a, b, d]);
    let mut sw = cx.sw();
    let (y1, y2, y3) = sw.put3(h.phi_inv());
    let (p1, p2) = sw.put2(&c.p_r);
    let (y21, y22) = sw.split(y2);
    let b = sw.word(w![y21, p1]);
    let d = sw.word(w![y22, p2, s(w![y3])]);
    ok(vec![(lhs, sw.finish(&[y1, b, d]))])
}

fn q_left_q_right<F: Field>(cx: &Ctx<'_, F>, _: &[Arg]) -> Result<Vec<Sides<F>>, CanonicalError> {
    let (h, c) = (cx.h, &cx.c);
    let mut sw = cx.sw();
    let (x1, x2, x3) = sw.put3(h.phi());
    let (q1, q2) = sw.put2(&c.q_l);
    let (x31, x32) = sw.split(x3);
    let b = sw.word(w![s(w![x2]), q1, x31]);
    let d = sw.word(w![q2, x32]);
    let lhs = sw.finish(&[x1, b, d]);
    let mut sw = cx.sw();
    let (q1, q2) = sw.put2(&c.q_r);
    let (y1, y2, y3) = sw.put3(h.phi_inv());
    let (y11, y12) = sw.split(y1);
    let a = sw.word(w![q1, y11]);
    let b = sw.word(w![s(w![q2, y12]), y2]);
    ok(vec![(lhs, sw.finish(&[a, b, y3]))])
}

fn p_left_p_right<F: Field>(cx: &Ctx<'_, F>, _: &[Arg]) -> Result<Vec<Sides<F>>, CanonicalError> {
    let (h, c) = (cx.h, &cx.c);
    let mut sw = cx.sw();
    let (y1, y2, y3) = sw.put3(h.phi_inv());
    let (p1, p2) = sw.put2(&c.p_l);
    let (y31, y32) = sw.split(y3);
    let b = sw.word(w![y2, s(w![y31, p1])]);
    let d = sw.word(w![y32, p2]);
    let lhs = sw.finish(&[y1, b, d]);
    let mut sw = cx.sw();
    let (x1, x2, x3) = sw.put3(h.phi());
    let (p1, p2) = sw.put2(&c.p_r);
    let (x11, x12) = sw.split(x1);
    let a = sw.word(w![x11, p1]);
    let b = sw.word(w![x12, p2, s(w![x2])]);
    ok(vec![(lhs, sw.finish(&[a, b, x3]))])
}

fn twist_p_left<F: Field>(cx: &Ctx<'_, F>, _: &[Arg]) -> Result<Vec<Sides<F>>, CanonicalError> {
    let c = &cx.c;
    let mut sw = cx.sw();
    let (p1, p2) = sw.put2(&c.p_l);
    let (f1, f2) = sw.put2(&c.f);
    let l = sw.word(w![s(w![p2]), f1]);
    let r = sw.word(w![s(w![p1]), f2]);
    let lhs = sw.finish(&[l, r]);
    let mut sw = cx.sw();
    let (q1, q2) = sw.put2(&c.q_r);
    let (g1, g2) = sw.put2(&c.f_inv);
    let (g11, g12) = sw.split(g1);
    let l = sw.word(w![q1, g11]);
    let r = sw.word(w![si(w![g2]), q2, g12]);
    ok(vec![(lhs, sw.finish(&[l, r]))])
}

fn twist_p_right<F: Field>(cx: &Ctx<'_, F>, _: &[Arg]) -> Result<Vec<Sides<F>>, CanonicalError> {
    let c = &cx.c;
    let mut sw = cx.sw();
    let (g1, g2) = sw.put2(&c.f_inv);
    let (q1, q2) = sw.put2(&c.q_l);
    let (g21, g22) = sw.split(g2);
    let l = sw.word(w![s(w![g1]), q1, g21]);
    let r = sw.word(w![q2, g22]);
    let lhs = sw.finish(&[l, r]);
    let mut sw = cx.sw();
    let (p1, p2) = sw.put2(&c.p_r);
    let (f1, f2) = sw.put2(&c.f);
    let l = sw.word(w![s(w![p2]), f1]);
    let r = sw.word(w![s(w![p1]), f2]);
    ok(vec![(lhs, sw.finish(&[l, r]))])
}

fn delta_associator<F: Field>(cx: &Ctx<'_, F>, _: &[Arg]) -> Result<Vec<Sides<F>>, CanonicalError> {
    let (h, c) = (cx.h, &cx.c);
    let mut sw = cx.sw();
    let (x1, x2, x3) = sw.put3(h.phi());
    let (x31, x32) = sw.split(x3);
    let (d1, d2) = sw.put2(&c.delta);
    let m1 = sw.word(w![d1, s(w![x32])]);
    let m2 = sw.word(w![d2, s(w![x31])]);
    let (y1, y2, y3) = sw.put3(h.phi_inv());
    let (x11, x12) = sw.split(x1);
    let a = sw.word(w![x11, y1, m1]);
    let b = sw.word(w![x12, y2]);
    let (m21, m22) = sw.split(m2);
    let b = sw.word(w![b, m21]);
    let d = sw.word(w![x2, y3, m22]);
    let lhs = sw.finish(&[a, b, d]);
    let mut sw = cx.sw();
    let (x1, x2, x3) = sw.put3(h.phi());
    let (x31, x32) = sw.split(x3);
    let (d1, d2) = sw.put2(&c.delta);
    let m = sw.word(w![x1, d1, s(w![x32])]);
    let n2 = sw.word(w![x2, d2, s(w![x31])]);
    let (m1, m2) = sw.split(m);
    let (g1, g2) = sw.put2(&c.f_inv);
    let a = sw.word(w![m1, g1]);
    let b = sw.word(w![m2, g2]);
    let (y1, y2, y3) = sw.put3(h.phi_inv());
    let a = sw.word(w![a, s(w![y3])]);
    let b = sw.word(w![b, s(w![y2])]);
    let d = sw.word(w![n2, s(w![y1])]);
    let (f1, f2) = sw.put2(&c.f);
    let b = sw.word(w![b, f1]);
    let d = sw.word(w![d, f2]);
    ok(vec![(lhs, sw.finish(&[a, b, d]))])
}

fn twist_v_q_left<F: Field>(cx: &Ctx<'_, F>, _: &[Arg]) -> Result<Vec<Sides<F>>, CanonicalError> {
    let c = &cx.c;
    let mut sw = cx.sw();
    let (f1, f2) = sw.put2(&c.f);
    let (v1, v2) = sw.put2(&c.v);
    let sf = sw.word(w![si(w![f1])]);
    let (sf1, sf2) = sw.split(sf);
    let l = sw.word(w![f2, v1, sf1]);
    let r = sw.word(w![v2, sf2]);
    ok(vec![(sw.finish(&[l, r]), c.q_l.clone())])
}

fn u_q_left_twist<F: Field>(cx: &Ctx<'_, F>, _: &[Arg]) -> Result<Vec<Sides<F>>, CanonicalError> {
    let c = &cx.c;
    let mut sw = cx.sw();
    let (u1, u2) = sw.put2(&c.u);
    let (q1, q2) = sw.put2(&c.q_l);
    let (u21, u22) = sw.split(u2);
    let l = sw.word(w![s(w![u1]), q1, u21]);
    let r = sw.word(w![q2, u22]);
    ok(vec![(sw.finish(&[l, r]), c.f.clone())])
}

fn p_right_twist_alpha<F: Field>(cx: &Ctx<'_, F>, _: &[Arg]) -> Result<Vec<Sides<F>>, CanonicalError> {
    let (h, c) = (cx.h, &cx.c);
    let mut sw = cx.sw();
    let (p1, p2) = sw.put2(&c.p_r);
    let (ff1, ff2) = sw.put2(&c.f);
    let (f1, f2) = sw.put2(&c.f);
    let (x1, x2, x3) = sw.put3(h.phi());
    let (f21, f22) = sw.split(f2);
    let l = sw.word(w![s(w![p1]), ff2, f22, x3]);
    let r = sw.word(w![s(w![p2, f1, x1]), ff1, f21, x2]);
    let lhs = sw.finish(&[l, r]);
    ok(vec![(lhs, h.unit().tensor_product(h.alpha())?)])
}

// --------------------------------------------------- modular function μ

fn mu_left_integral<F: Field>(cx: &Ctx<'_, F>, a: &[Arg]) -> Result<Vec<Sides<F>>, CanonicalError> {
    let h = cx.h;
    let ints = cx.ints()?;
    let mut sw = cx.sw();
    let mut io = Io::new();
    let e = io.arg(&mut sw, h, a[0]);
    let out = sw.word(w![&ints.left, e]);
    let lhs = io.finish(sw, &[out]);
    let mut sw = cx.sw();
    let mut io = Io::new();
    let e = io.arg(&mut sw, h, a[0]);
    sw.scalar(&ints.mu, w![e]);
    let out = sw.put1(&ints.left);
    ok(vec![(lhs, io.finish(sw, &[out]))])
}

fn mu_right_integral<F: Field>(cx: &Ctx<'_, F>, a: &[Arg]) -> Result<Vec<Sides<F>>, CanonicalError> {
    let h = cx.h;
    let ints = cx.ints()?;
    let mut sw = cx.sw();
    let mut io = Io::new();
    let e = io.arg(&mut sw, h, a[0]);
    let out = sw.word(w![e, &ints.right]);
    let lhs = io.finish(sw, &[out]);
    let mut sw = cx.sw();
    let mut io = Io::new();
    let e = io.arg(&mut sw, h, a[0]);
    sw.scalar(&ints.mu_inv, w![e]);
    let out = sw.put1(&ints.right);
    ok(vec![(lhs, io.finish(sw, &[out]))])
}

fn mu_normalization<F: Field>(cx: &Ctx<'_, F>, _: &[Arg]) -> Result<Vec<Sides<F>>, CanonicalError> {
    let h = cx.h;
    let ints = cx.ints()?;
    let ab = h.mul(h.alpha(), h.beta());
    let k = ints.mu.eval(&ab).times(&ints.mu_inv.eval(&ab));
    let conv = h.delta(&h.unit().clone()).contract(&ints.mu, 0)?;
    let mut sw = cx.sw();
    let (l, e) = sw.label();
    let (e1, e2) = sw.split(e);
    sw.scalar(&ints.mu, w![e1]);
    sw.scalar(&ints.mu_inv, w![e2]);
    let convolution = sw.finish(&[l]);
    ok(vec![
        (h.unit().scale(&k), h.unit().clone()),
        (convolution, h.counit().as_tensor()),
        (ints.mu.compose(&*h.antipode_inverse()?).as_tensor(), ints.mu_inv.as_tensor()),
        (conv, h.unit().scale(&ints.mu.eval(h.unit()))),
    ])
}

fn f2<F: Field>(cx: &Ctx<'_, F>, _: &[Arg]) -> Result<Vec<Sides<F>>, CanonicalError> {
    let (h, c) = (cx.h, &cx.c);
    let t = &cx.ints()?.left;
    let mut sw = cx.sw();
    let tl = sw.put1(t);
    let (t1, t2) = sw.split(tl);
    let r = sw.word(w![s(w![t2])]);
    let plain = sw.finish(&[t1, r]);
    let mut sw = cx.sw();
    let (q1, q2) = sw.put2(&c.q_r);
    let tl = sw.put1(t);
    let (t1, t2) = sw.split(tl);
    let l = sw.word(w![q1, t1]);
    let r = sw.word(w![s(w![q2, t2]), h.beta()]);
    let right_beta = sw.finish(&[l, r]);
    let mut sw = cx.sw();
    let (q1, q2) = sw.put2(&c.q_r);
    let tl = sw.put1(t);
    let (t1, t2) = sw.split(tl);
    let l = sw.word(w![h.beta(), q1, t1]);
    let r = sw.word(w![s(w![q2, t2])]);
    ok(vec![(plain.clone(), right_beta), (plain, sw.finish(&[l, r]))])
}

fn moving_left_integral<F: Field>(cx: &Ctx<'_, F>, a: &[Arg]) -> Result<Vec<Sides<F>>, CanonicalError> {
    let (h, c) = (cx.h, &cx.c);
    let ints = cx.ints()?;
    let mut sw = cx.sw();
    let mut io = Io::new();
    let e = io.arg(&mut sw, h, a[0]);
    let (p1, p2) = sw.put2(&c.p_r);
    let tl = sw.put1(&ints.left);
    let (t1, t2) = sw.split(tl);
    let l = sw.word(w![t1, p1, e]);
    let r = sw.word(w![t2, p2]);
    let lhs = io.finish(sw, &[l, r]);
    let mut sw = cx.sw();
    let mut io = Io::new();
    let e = io.arg(&mut sw, h, a[0]);
    let (p1, p2) = sw.put2(&c.p_r);
    let tl = sw.put1(&ints.left);
    let (t1, t2) = sw.split(tl);
    let (e1, e2) = sw.split(e);
    sw.scalar(&ints.mu, w![e1]);
    let l = sw.word(w![t1, p1]);
    let r = sw.word(w![t2, p2, s(w![e2])]);
    ok(vec![(lhs, io.finish(sw, &[l, r]))])
}

fn moving_right_integral<F: Field>(cx: &Ctx<'_, F>, a: &[Arg]) -> Result<Vec<Sides<F>>, CanonicalError> {
    let (h, c) = (cx.h, &cx.c);
    let ints = cx.ints()?;
    let mut sw = cx.sw();
    let mut io = Io::new();
    let e = io.arg(&mut sw, h, a[0]);
    let (p1, p2) = sw.put2(&c.p_r);
    let rl = sw.put1(&ints.right);
    let (r1, r2) = sw.split(rl);
    let l = sw.word(w![r1, p1, e]);
    let r = sw.word(w![r2, p2]);
    let lhs = io.finish(sw, &[l, r]);
    let mut sw = cx.sw();
    let mut io = Io::new();
    let e = io.arg(&mut sw, h, a[0]);
    let (p1, p2) = sw.put2(&c.p_r);
    let rl = sw.put1(&ints.right);
    let (r1, r2) = sw.split(rl);
    let l = sw.word(w![r1, p1]);
    let r = sw.word(w![r2, p2, s(w![e])]);
    ok(vec![(lhs, io.finish(sw, &[l, r]))])
}

fn qqt<F: Field>(cx: &Ctx<'_, F>, _: &[Arg]) -> Result<Vec<Sides<F>>, CanonicalError> {
    let (h, c) = (cx.h, &cx.c);
    let ints = cx.ints()?;
    let one = h.unit();
    let dt = h.delta(&ints.left);
    let dr = h.delta(&ints.right);
    let _ = one;
    ok(vec![(h.mul(&c.q_r, &dt), h.mul(&c.q_l, &dt)), (h.mul(&dr, &c.p_r), h.mul(&dr, &c.p_l))])
}

fn q_moves_through_integral<F: Field>(cx: &Ctx<'_, F>, a: &[Arg]) -> Result<Vec<Sides<F>>, CanonicalError> {
    let (h, c) = (cx.h, &cx.c);
    let ints = cx.ints()?;
    let mut sw = cx.sw();
    let mut io = Io::new();
    let e = io.arg(&mut sw, h, a[0]);
    let (q1, q2) = sw.put2(&c.q_r);
    let tl = sw.put1(&ints.left);
    let (t1, t2) = sw.split(tl);
    let l = sw.word(w![e, q1, t1]);
    let r = sw.word(w![q2, t2]);
    let lhs = io.finish(sw, &[l, r]);
    let mut sw = cx.sw();
    let mut io = Io::new();
    let e = io.arg(&mut sw, h, a[0]);
    let (q1, q2) = sw.put2(&c.q_r);
    let tl = sw.put1(&ints.left);
    let (t1, t2) = sw.split(tl);
    let l = sw.word(w![q1, t1]);
    let r = sw.word(w![si(w![e]), q2, t2]);
    ok(vec![(lhs, io.finish(sw, &[l, r]))])
}

fn rint3<F: Field>(cx: &Ctx<'_, F>, a: &[Arg]) -> Result<Vec<Sides<F>>, CanonicalError> {
    let (h, c) = (cx.h, &cx.c);
    let ints = cx.ints()?;
    let mut sw = cx.sw();
    let mut io = Io::new();
    let e = io.arg(&mut sw, h, a[0]);
    let rl = sw.put1(&ints.right);
    let (r1, r2) = sw.split(rl);
    let l = sw.word(w![e, r1]);
    let lhs = io.finish(sw, &[l, r2]);
    let mut sw = cx.sw();
    let mut io = Io::new();
    let e = io.arg(&mut sw, h, a[0]);
    let (p1, p2) = sw.put2(&c.p_r);
    let (q1, q2) = sw.put2(&c.q_r);
    let rl = sw.put1(&ints.right);
    let (r1, r2) = sw.split(rl);
    let (e1, e2) = sw.split(e);
    sw.scalar(&ints.mu_inv, w![e1, p1]);
    let l = sw.word(w![q1, r1]);
    let r = sw.word(w![si(w![e2, p2]), q2, r2]);
    ok(vec![(lhs, io.finish(sw, &[l, r]))])
}

fn rint4<F: Field>(cx: &Ctx<'_, F>, a: &[Arg]) -> Result<Vec<Sides<F>>, CanonicalError> {
    let (h, c) = (cx.h, &cx.c);
    let ints = cx.ints()?;
    let mut sw = cx.sw();
    let mut io = Io::new();
    let e = io.arg(&mut sw, h, a[0]);
    let (u1, u2) = sw.put2(&c.u);
    let rl = sw.put1(&ints.right);
    let (r1, r2) = sw.split(rl);
    let l = sw.word(w![r1, u1]);
    let r = sw.word(w![r2, u2, s(w![e])]);
    let lhs = io.finish(sw, &[l, r]);
    let mut sw = cx.sw();
    let mut io = Io::new();
    let e = io.arg(&mut sw, h, a[0]);
    let (u1, u2) = sw.put2(&c.u);
    let rl = sw.put1(&ints.right);
    let (r1, r2) = sw.split(rl);
    let l = sw.word(w![r1, u1, e]);
    let r = sw.word(w![r2, u2]);
    ok(vec![(lhs, io.finish(sw, &[l, r]))])
}

fn rint5<F: Field>(cx: &Ctx<'_, F>, a: &[Arg]) -> Result<Vec<Sides<F>>, CanonicalError> {
    let (h, c) = (cx.h, &cx.c);
    let ints = cx.ints()?;
    let mut sw = cx.sw();
    let mut io = Io::new();
    let e = io.arg(&mut sw, h, a[0]);
    let (v1, v2) = sw.put2(&c.v);
    let rl = sw.put1(&ints.right);
    let (r1, r2) = sw.split(rl);
    let l = sw.word(w![v1, r1]);
    let r = sw.word(w![si(w![e]), v2, r2]);
    let lhs = io.finish(sw, &[l, r]);
    let mut sw = cx.sw();
    let mut io = Io::new();
    let e = io.arg(&mut sw, h, a[0]);
    let (v1, v2) = sw.put2(&c.v);
    let rl = sw.put1(&ints.right);
    let (r1, r2) = sw.split(rl);
    let (e1, e2) = sw.split(e);
    sw.scalar(&ints.mu, w![e1]);
    let l = sw.word(w![e2, v1, r1]);
    let r = sw.word(w![v2, r2]);
    ok(vec![(lhs, io.finish(sw, &[l, r]))])
}

/// `q¹x₁p¹ ⊗ q²x₂p²`.
fn qxp<F: Field>(cx: &Ctx<'_, F>, x: &TensorElement<F>) -> TensorElement<F> {
    crate::intcoint::sandwich(cx.h, &cx.c.q_r, x, &cx.c.p_r)
}

fn uv_on_right_integral<F: Field>(cx: &Ctx<'_, F>, _: &[Arg]) -> Result<Vec<Sides<F>>, CanonicalError> {
    let (h, c) = (cx.h, &cx.c);
    let ints = cx.ints()?;
    let sinv = h.antipode_inverse()?;
    let r = h.s_inv(&ints.left)?;
    let mut sw = cx.sw();
    let (v1, v2) = sw.put2(&c.v);
    let (u1, u2) = sw.put2(&c.u);
    let rl = sw.put1(&r);
    let (r1, r2) = sw.split(rl);
    let l = sw.word(w![v1, r1, u1]);
    let rr = sw.word(w![v2, r2, u2]);
    let lhs = sw.finish(&[l, rr]);
    let rhs = qxp(cx, &ints.left).permute_legs(&[1, 0]).apply_on_leg(&sinv, 0)?.apply_on_leg(&sinv, 1)?;
    ok(vec![(lhs, rhs)])
}

fn q_r_p_on_right_integral<F: Field>(cx: &Ctx<'_, F>, _: &[Arg]) -> Result<Vec<Sides<F>>, CanonicalError> {
    let (h, c) = (cx.h, &cx.c);
    let ints = cx.ints()?;
    let r = h.s_inv(&ints.left)?;
    let lhs = qxp(cx, &r);
    let e = qxp(cx, &ints.left);
    let mut sw = cx.sw();
    let (q1, q2) = sw.put2(&c.q_l);
    let (a, b) = sw.put2(&e);
    sw.scalar(&ints.mu, w![q1]);
    let l = sw.word(w![q2, si(w![b])]);
    let rr = sw.word(w![si(w![a])]);
    ok(vec![(lhs, sw.finish(&[l, rr]))])
}

// ------------------------------------------------------------- cointegrals

fn charact_left_cointegral<F: Field>(cx: &Ctx<'_, F>, a: &[Arg]) -> Result<Vec<Sides<F>>, CanonicalError> {
    let (h, c) = (cx.h, &cx.c);
    let ints = cx.ints()?;
    let lam = &cx.co()?.left;
    let mut sw = cx.sw();
    let mut io = Io::new();
    let e = io.arg(&mut sw, h, a[0]);
    let (v1, v2) = sw.put2(&c.v);
    let (u1, u2) = sw.put2(&c.u);
    let (e1, e2) = sw.split(e);
    sw.scalar(lam, w![v2, e2, u2]);
    let out = sw.word(w![v1, e1, u1]);
    let lhs = io.finish(sw, &[out]);
    let mut sw = cx.sw();
    let mut io = Io::new();
    let e = io.arg(&mut sw, h, a[0]);
    let (y1, y2, y3) = sw.put3(h.phi_inv());
    sw.scalar(&ints.mu, w![y1]);
    sw.scalar(lam, w![e, s(w![y2])]);
    ok(vec![(lhs, io.finish(sw, &[y3]))])
}

fn alt_charact_left_cointegral<F: Field>(cx: &Ctx<'_, F>, a: &[Arg]) -> Result<Vec<Sides<F>>, CanonicalError> {
    let (h, c) = (cx.h, &cx.c);
    let ints = cx.ints()?;
    let lam = &cx.co()?.left;
    let mut sw = cx.sw();
    let mut io = Io::new();
    let e = io.arg(&mut sw, h, a[0]);
    let (f1, f2) = sw.put2(&c.f);
    let (u1, u2) = sw.put2(&c.u);
    let (e1, e2) = sw.split(e);
    sw.scalar(lam, w![si(w![f1]), e2, u2]);
    let out = sw.word(w![si(w![f2]), e1, u1]);
    let lhs = io.finish(sw, &[out]);
    let mut sw = cx.sw();
    let mut io = Io::new();
    let e = io.arg(&mut sw, h, a[0]);
    let (q1, q2) = sw.put2(&c.q_r);
    let (y1, y2, y3) = sw.put3(h.phi_inv());
    let (q11, q12) = sw.split(q1);
    sw.scalar(&ints.mu, w![q11, y1]);
    sw.scalar(lam, w![e, s(w![q12, y2])]);
    let out = sw.word(w![q2, y3]);
    ok(vec![(lhs, io.finish(sw, &[out]))])
}

fn prelim_cointegral<F: Field>(cx: &Ctx<'_, F>, _: &[Arg]) -> Result<Vec<Sides<F>>, CanonicalError> {
    let h = cx.h;
    let ints = cx.ints()?;
    let lam = &cx.co()?.left;
    let lhs = qxp(cx, &ints.left).contract(lam, 1)?;
    let k = ints.mu.eval(h.beta()).times(&lam.eval(&ints.left));
    ok(vec![(lhs, h.unit().scale(&k))])
}

fn lcoint_simpl<F: Field>(cx: &Ctx<'_, F>, a: &[Arg]) -> Result<Vec<Sides<F>>, CanonicalError> {
    let (h, c) = (cx.h, &cx.c);
    let ints = cx.ints()?;
    let lam = &cx.co()?.left;
    let mut sw = cx.sw();
    let mut io = Io::new();
    let x = io.arg(&mut sw, h, a[0]);
    let y = io.arg(&mut sw, h, a[1]);
    let (q1, q2) = sw.put2(&c.q_r);
    let (p1, p2) = sw.put2(&c.p_r);
    let (x1, x2) = sw.split(x);
    sw.scalar(lam, w![q2, x2, p2, s(w![y])]);
    let out = sw.word(w![q1, x1, p1]);
    let lhs = io.finish(sw, &[out]);
    let mut sw = cx.sw();
    let mut io = Io::new();
    let (z1, z2, z3) = sw.put3(h.phi_inv());
    sw.scalar(&ints.mu, w![z1]);
    let (q1, q2) = sw.put2(&c.q_l);
    let tail = sw.word(w![q2, z3]);
    let y = io.arg_at(&mut sw, h, a[1], 1);
    let (y1, y2) = sw.split(y);
    let (p1, p2) = sw.put2(&c.p_l);
    let mid = sw.word(w![z2, y1, p1]);
    let out = sw.word(w![tail, y2, p2]);
    let x = io.arg_at(&mut sw, h, a[0], 0);
    sw.scalar(lam, w![si(w![q1]), x, s(w![mid])]);
    ok(vec![(lhs, io.finish(sw, &[out]))])
}

fn cointegral_moves_antipode<F: Field>(cx: &Ctx<'_, F>, a: &[Arg]) -> Result<Vec<Sides<F>>, CanonicalError> {
    let h = cx.h;
    let ints = cx.ints()?;
    let lam = &cx.co()?.left;
    let mut sw = cx.sw();
    let mut io = Io::new();
    let x = io.arg(&mut sw, h, a[0]);
    let y = io.arg(&mut sw, h, a[1]);
    sw.scalar(lam, w![si(w![x]), y]);
    let out = sw.put1(h.unit());
    let lhs = io.finish(sw, &[out]);
    let mut sw = cx.sw();
    let mut io = Io::new();
    let x = io.arg(&mut sw, h, a[0]);
    let y = io.arg(&mut sw, h, a[1]);
    let (x1, x2) = sw.split(x);
    sw.scalar(&ints.mu, w![x1]);
    sw.scalar(lam, w![y, s(w![x2])]);
    let out = sw.put1(h.unit());
    ok(vec![(lhs, io.finish(sw, &[out]))])
}

/// `λ(S⁻¹(q²x₂p²))S⁻¹(q¹x₁p¹)` and `λ(q¹x₁p¹)S(q²x₂p²)` recomputed here.
fn g_pair<F: Field>(cx: &Ctx<'_, F>) -> Result<Sides<F>, CanonicalError> {
    let h = cx.h;
    let ints = cx.ints()?;
    let lam = &cx.co()?.left;
    let sinv = h.antipode_inverse()?;
    let e = qxp(cx, &ints.left);
    let g = e.apply_on_leg(&sinv, 0)?.apply_on_leg(&sinv, 1)?.contract(lam, 1)?;
    let g_inv = e.apply_on_leg(h.antipode(), 1)?.contract(lam, 0)?;
    Ok((g, g_inv))
}

fn first_radford<F: Field>(cx: &Ctx<'_, F>, _: &[Arg]) -> Result<Vec<Sides<F>>, CanonicalError> {
    let h = cx.h;
    let ints = cx.ints()?;
    let co = cx.co()?;
    let lam = &co.left;
    let sinv = h.antipode_inverse()?;
    let e = qxp(cx, &ints.left);
    let lhs = e.apply_on_leg(h.antipode(), 1)?;
    let rhs = e.permute_legs(&[1, 0]).apply_on_leg(&sinv, 1)?;
    let gi = h.unit().tensor_product(&co.g_inv)?;
    ok(vec![
        (lam.compose(&sinv).as_tensor(), crate::qha::rhit(h, lam, &co.g).as_tensor()),
        (lhs, h.mul(&gi, &rhs)),
    ])
}

fn modular_element_formulas<F: Field>(cx: &Ctx<'_, F>, _: &[Arg]) -> Result<Vec<Sides<F>>, CanonicalError> {
    let h = cx.h;
    let (g, g_inv) = g_pair(cx)?;
    let one = h.unit().clone();
    ok(vec![(h.mul(&g, &g_inv), one.clone()), (h.mul(&g_inv, &g), one)])
}

fn s4_equivalent<F: Field>(cx: &Ctx<'_, F>, a: &[Arg]) -> Result<Vec<Sides<F>>, CanonicalError> {
    let (h, c) = (cx.h, &cx.c);
    let ints = cx.ints()?;
    let co = cx.co()?;
    let sgi = h.s_inv(&co.g_inv)?;
    let mut sw = cx.sw();
    let mut io = Io::new();
    let e = io.arg(&mut sw, h, a[0]);
    let (f1, f2) = sw.put2(&c.f);
    sw.scalar(&ints.mu, w![f1]);
    let out = sw.word(w![sp(-2, w![e]), &sgi, s(w![f2])]);
    let lhs = io.finish(sw, &[out]);
    let mut sw = cx.sw();
    let mut io = Io::new();
    let e = io.arg(&mut sw, h, a[0]);
    let (f1, f2) = sw.put2(&c.f);
    let (e1, e2) = sw.split(e);
    let (e21, e22) = sw.split(e2);
    sw.scalar(&ints.mu, w![e1, f1]);
    sw.scalar(&ints.mu_inv, w![e22]);
    let out = sw.word(w![&sgi, s(w![s(w![e21]), f2])]);
    ok(vec![(lhs, io.finish(sw, &[out]))])
}

fn frobenius_comparison_u<F: Field>(cx: &Ctx<'_, F>, _: &[Arg]) -> Result<Vec<Sides<F>>, CanonicalError> {
    let (h, c) = (cx.h, &cx.c);
    let ints = cx.ints()?;
    let co = cx.co()?;
    let t = &ints.left;
    let sinv = h.antipode_inverse()?;
    let left = qxp(cx, t).apply_on_leg(h.antipode(), 1)?;
    let right = crate::intcoint::sandwich(h, &c.q_l, t, &c.p_l).apply_on_leg(h.antipode(), 1)?;
    let ui = h.unit().tensor_product(&co.u_inv)?;
    ok(vec![
        (co.left.compose(&sinv).as_tensor(), crate::qha::rhit(h, &co.right, &co.u).as_tensor()),
        (left, h.mul(&ui, &right)),
    ])
}

fn u_formulas<F: Field>(cx: &Ctx<'_, F>, _: &[Arg]) -> Result<Vec<Sides<F>>, CanonicalError> {
    let (h, c) = (cx.h, &cx.c);
    let ints = cx.ints()?;
    let s2 = h.antipode_power(2)?;
    let u = c.v.contract(&ints.mu, 0)?;
    let u = s2.apply(&u);
    let mut sw = cx.sw();
    let (q1, q2) = sw.put2(&c.q_r);
    let (g1, g2) = sw.put2(&c.f_inv);
    let (q11, q12) = sw.split(q1);
    sw.scalar(&ints.mu_inv, w![q12, g2, s(w![q2])]);
    let out = sw.word(w![s(w![q11, g1])]);
    let u_inv = sw.finish(&[out]);
    let one = h.unit().clone();
    ok(vec![(h.mul(&u, &u_inv), one.clone()), (h.mul(&u_inv, &u), one)])
}

fn inchi_left_cointegral<F: Field>(cx: &Ctx<'_, F>, a: &[Arg]) -> Result<Vec<Sides<F>>, CanonicalError> {
    let (h, c) = (cx.h, &cx.c);
    let ints = cx.ints()?;
    let lam = &cx.co()?.left;
    let k = ints.mu_inv.eval(h.alpha()).times(&ints.mu.eval(h.beta()));
    let mut sw = cx.sw();
    let mut io = Io::new();
    let x = io.arg(&mut sw, h, a[0]);
    let y = io.arg(&mut sw, h, a[1]);
    let (q1, q2) = sw.put2(&c.q_l);
    let (p1, p2) = sw.put2(&c.p_l);
    let (x1, x2) = sw.split(x);
    sw.scalar(&ints.mu_inv, w![q1, x1, p1]);
    sw.scalar(lam, w![si(w![q2, x2, p2]), y]);
    let out = sw.put1(h.unit());
    let lhs = io.finish(sw, &[out]);
    let mut sw = cx.sw();
    let mut io = Io::new();
    let x = io.arg(&mut sw, h, a[0]);
    let y = io.arg(&mut sw, h, a[1]);
    sw.scalar(lam, w![y, s(w![x])]);
    sw.scale(&k);
    let out = sw.put1(h.unit());
    ok(vec![(lhs, io.finish(sw, &[out]))])
}

/// `λ(S⁻¹(f²)x₁g¹S(y))S⁻¹(f¹)x₂g²`, the common left side of the two
/// modular-element displays.
fn twisted_cointegral_side<F: Field>(cx: &Ctx<'_, F>, a: &[Arg]) -> Result<TensorElement<F>, CanonicalError> {
    let (h, c) = (cx.h, &cx.c);
    let lam = &cx.co()?.left;
    let mut sw = cx.sw();
    let mut io = Io::new();
    let x = io.arg(&mut sw, h, a[0]);
    let y = io.arg(&mut sw, h, a[1]);
    let (f1, f2) = sw.put2(&c.f);
    let (g1, g2) = sw.put2(&c.f_inv);
    let (x1, x2) = sw.split(x);
    sw.scalar(lam, w![si(w![f2]), x1, g1, s(w![y])]);
    let out = sw.word(w![si(w![f1]), x2, g2]);
    Ok(io.finish(sw, &[out]))
}

fn norm_def_modular<F: Field>(cx: &Ctx<'_, F>, a: &[Arg]) -> Result<Vec<Sides<F>>, CanonicalError> {
    let (h, c) = (cx.h, &cx.c);
    let ints = cx.ints()?;
    let co = cx.co()?;
    let lam = &co.left;
    let lhs = twisted_cointegral_side(cx, a)?;
    let mut sw = cx.sw();
    let mut io = Io::new();
    let (f1, f2) = sw.put2(&c.f);
    sw.scalar(&ints.mu, w![f1]);
    let (u1, u2) = sw.put2(&c.u);
    let (uu1, uu2) = sw.put2(&c.u);
    let (u21, u22) = sw.split(u2);
    sw.scalar(&ints.mu_inv, w![u22, uu2, h.alpha()]);
    let inner = sw.word(w![u21, uu1]);
    let (y1, y2, y3) = sw.put3(h.phi_inv());
    let (y11, y12) = sw.split(y1);
    let (x1, x2, x3) = sw.put3(h.phi_inv());
    sw.scalar(&ints.mu, w![u1, y12, x2]);
    let g = sw.word(w![si(w![&co.g_inv, y11, x1])]);
    let (x31, x32) = sw.split(x3);
    let inner = sw.word(w![inner, y2, x31]);
    let tail = sw.word(w![y3, x32]);
    let yv = io.arg_at(&mut sw, h, a[1], 1);
    let (yy1, yy2) = sw.split(yv);
    let (p1, p2) = sw.put2(&c.p_l);
    let inner = sw.word(w![inner, yy1, p1]);
    let tail = sw.word(w![tail, yy2, p2]);
    let xv = io.arg_at(&mut sw, h, a[0], 0);
    sw.scalar(lam, w![xv, s(w![tail])]);
    let out = sw.word(w![g, s(w![s(w![inner]), f2])]);
    sw.scale(&ints.mu.eval(h.beta()));
    ok(vec![(lhs, io.finish(sw, &[out]))])
}

fn fvf_unimodular_form<F: Field>(cx: &Ctx<'_, F>, a: &[Arg]) -> Result<Vec<Sides<F>>, CanonicalError> {
    let (h, c) = (cx.h, &cx.c);
    let ints = cx.ints()?;
    let co = cx.co()?;
    let lam = &co.left;
    let lhs = twisted_cointegral_side(cx, a)?;
    let mut sw = cx.sw();
    let mut io = Io::new();
    let (f1, f2) = sw.put2(&c.f);
    sw.scalar(&ints.mu, w![h.beta(), f1]);
    let (big1, big2, big3) = sw.put3(h.phi());
    let (u1, u2) = sw.put2(&c.u);
    sw.scalar(&ints.mu_inv, w![big3, u2, h.alpha()]);
    let (u11, u12) = sw.split(u1);
    let first = sw.word(w![big1, u11]);
    let inner = sw.word(w![big2, u12]);
    let (y1, y2, y3) = sw.put3(h.phi_inv());
    let g = sw.word(w![si(w![&co.g_inv, y1])]);
    let (y21, y22) = sw.split(y2);
    let first = sw.word(w![first, y21]);
    let inner = sw.word(w![inner, y22]);
    let (x1, x2, x3) = sw.put3(h.phi_inv());
    sw.scalar(&ints.mu, w![first, x1]);
    let inner = sw.word(w![inner, x2]);
    let tail = sw.word(w![y3, x3]);
    let yv = io.arg_at(&mut sw, h, a[1], 1);
    let (yy1, yy2) = sw.split(yv);
    let (p1, p2) = sw.put2(&c.p_l);
    let inner = sw.word(w![inner, yy1, p1]);
    let tail = sw.word(w![tail, yy2, p2]);
    let xv = io.arg_at(&mut sw, h, a[0], 0);
    sw.scalar(lam, w![xv, s(w![tail])]);
    let out = sw.word(w![g, s(w![s(w![inner]), f2])]);
    ok(vec![(lhs, io.finish(sw, &[out]))])
}

fn mu_on_twisted_cointegral<F: Field>(cx: &Ctx<'_, F>, a: &[Arg]) -> Result<Vec<Sides<F>>, CanonicalError> {
    let (h, c) = (cx.h, &cx.c);
    let ints = cx.ints()?;
    let co = cx.co()?;
    let lam = &co.left;
    let lhs = twisted_cointegral_side(cx, a)?;
    let rank = lhs.rank();
    let lhs = lhs.contract(&ints.mu, rank - 1)?;
    let k = ints.mu_inv.eval(&h.mul(h.alpha(), &co.g_inv));
    let mut sw = cx.sw();
    let mut io = Io::new();
    let x = io.arg(&mut sw, h, a[0]);
    let y = io.arg(&mut sw, h, a[1]);
    let (q1, q2) = sw.put2(&c.q_l);
    let (p1, p2) = sw.put2(&c.p_l);
    let (q21, q22) = sw.split(q2);
    let (y1, y2) = sw.split(y);
    sw.scalar(&ints.mu, w![q1]);
    sw.scalar(&ints.mu, w![q21, y1, p1]);
    sw.scalar(lam, w![x, s(w![q22, y2, p2])]);
    sw.scale(&k);
    let rhs = io.finish(sw, &[]);
    let lhs = if rank == 1 { lhs_scalar_to_tensor(h, lhs) } else { lhs };
    let rhs = if rank == 1 { lhs_scalar_to_tensor(h, rhs) } else { rhs };
    ok(vec![(lhs, rhs)])
}

/// Rank-0 results are carried as multiples of the unit.
fn lhs_scalar_to_tensor<F: Field>(h: &QhaPresentation<F>, t: TensorElement<F>) -> TensorElement<F> {
    let k = t.iter().map(|(_, c)| c.clone()).next().unwrap_or_else(F::zero);
    h.unit().scale(&k)
}

fn app4<F: Field>(cx: &Ctx<'_, F>, _: &[Arg]) -> Result<Vec<Sides<F>>, CanonicalError> {
    let (h, c) = (cx.h, &cx.c);
    let ints = cx.ints()?;
    let co = cx.co()?;
    let mut sw = cx.sw();
    let (v1, v2) = sw.put2(&c.v);
    let rl = sw.put1(&ints.right);
    let (r1, r2) = sw.split(rl);
    let l = sw.word(w![v1, r1]);
    let r = sw.word(w![&co.g_inv, v2, r2]);
    let lhs = sw.finish(&[l, r]);
    let mut sw = cx.sw();
    let (v1, v2) = sw.put2(&c.v);
    let (p1, p2) = sw.put2(&c.p_r);
    let rl = sw.put1(&ints.right);
    let (r1, r2) = sw.split(rl);
    let l = sw.word(w![v2, r2, p2]);
    let r = sw.word(w![sp(2, w![v1, r1, p1]), h.alpha()]);
    ok(vec![(lhs, sw.finish(&[l, r]))])
}

fn app3b<F: Field>(cx: &Ctx<'_, F>, _: &[Arg]) -> Result<Vec<Sides<F>>, CanonicalError> {
    let (h, c) = (cx.h, &cx.c);
    let ints = cx.ints()?;
    let co = cx.co()?;
    let mut sw = cx.sw();
    let (p1, p2) = sw.put2(&c.p_l);
    let (f1, f2) = sw.put2(&c.f);
    let rl = sw.put1(&ints.right);
    let (r1, r2) = sw.split(rl);
    let l = sw.word(w![s(w![p2]), f1, r1]);
    let r = sw.word(w![&co.g_inv, s(w![p1]), f2, r2]);
    let lhs = sw.finish(&[l, r]);
    let mut sw = cx.sw();
    let (p1, p2) = sw.put2(&c.p_r);
    let (f1, f2) = sw.put2(&c.f);
    let (v1, v2) = sw.put2(&c.v);
    let (pp1, pp2) = sw.put2(&c.p_r);
    let rl = sw.put1(&ints.right);
    let (r1, r2) = sw.split(rl);
    sw.scalar(&ints.mu, w![s(w![p2]), f1]);
    let l = sw.word(w![s(w![p1]), f2, v2, r2, pp2]);
    let r = sw.word(w![sp(2, w![v1, r1, pp1]), h.alpha()]);
    ok(vec![(lhs, sw.finish(&[l, r]))])
}

// ------------------------------------------------------------------ table

fn entry<F>(name: &'static str, statement: &'static str, needs: Needs, arity: usize, eval: Eval<F>) -> Identity<F> {
    Identity { name, statement, needs, arity, eval }
}

/// Every registered identity, in evaluation order.
pub fn registry<F: Field>() -> Vec<Identity<F>> {
    use Needs::*;
    vec![
        entry("twist_intertwines_antipode", "f·Δ(S(h))·f⁻¹ = S(h₂)⊗S(h₁)", Canonical, 1, ca),
        entry("twist_counit", "ε(f¹)f² = ε(f²)f¹ = 1, same for f⁻¹", Canonical, 0, twist_counit),
        entry("twist_versus_gamma_delta", "f·Δ(α) = γ, Δ(β)·f⁻¹ = δ", Canonical, 0, gdf),
        entry("twist_pentagon", "f¹X¹⊗F¹f²₁X²⊗F²f²₂X³ = S(X³)f¹F¹₁⊗S(X²)f²F¹₂⊗S(X¹)F²", Canonical, 0, pf),
        entry("twist_alpha_beta", "g¹S(g²α) = β, S(βf¹)f² = α, f¹βS(f²) = S(α), S⁻¹(f²)βf¹ = S⁻¹(α)", Canonical, 0, fgab),
        entry("p_right_moves", "Δ(h₁)p_R(1⊗S(h₂)) = p_R(h⊗1)", Canonical, 1, qr1),
        entry("q_right_moves", "(1⊗S⁻¹(h₂))q_RΔ(h₁) = (h⊗1)q_R", Canonical, 1, qr1a),
        entry("p_left_moves", "Δ(h₂)p_L(S⁻¹(h₁)⊗1) = p_L(1⊗h)", Canonical, 1, ql1),
        entry("q_left_moves", "(S(h₁)⊗1)q_LΔ(h₂) = (1⊗h)q_L", Canonical, 1, ql1a),
        entry("p_q_cancellations", "q_R·p_R, p_R·q_R, q_L·p_L, p_L·q_L contractions equal 1⊗1", Canonical, 0, pq_pairs),
        entry("p_right_associator", "X¹p¹₁P¹⊗X²p¹₂P²⊗X³p² = x¹₁p¹⊗x¹₍₂,₁₎p²₁g¹S(x³)⊗x¹₍₂,₂₎p²₂g²S(x²)", Canonical, 0, pr1),
        entry("q_right_associator", "q¹Q¹₁x¹⊗q²Q¹₂x²⊗Q²x³ = q¹X¹₁⊗S⁻¹(f²X³)q²₁X¹₍₂,₁₎⊗S⁻¹(f¹X²)q²₂X¹₍₂,₂₎", Canonical, 0, qr2),
        entry("p_left_associator", "x¹p̃¹⊗x²p̃²₁P̃¹⊗x³p̃²₂P̃² = X³₍₁,₁₎p̃¹₁S⁻¹(X²g²)⊗X³₍₁,₂₎p̃¹₂S⁻¹(X¹g¹)⊗X³₂p̃²", Canonical, 0, pl1),
        entry("q_left_associator", "Q̃¹X¹⊗q̃¹Q̃²₁X²⊗q̃²Q̃²₂X³ = S(x²)f¹q̃¹₁x³₍₁,₁₎⊗S(x¹)f²q̃¹₂x³₍₁,₂₎⊗q̃²x³₂", Canonical, 0, ql2),
        entry("u_moves", "U(1⊗S(h)) = Δ(S(h₁))U(h₂⊗1)", Canonical, 1, fu1),
        entry("v_moves", "(1⊗S⁻¹(h))V = (h₂⊗1)VΔ(S⁻¹(h₁))", Canonical, 1, fv1),
        entry("q_right_via_v", "q_R = (q̃²⊗1)VΔ(S⁻¹(q̃¹))", Canonical, 0, qqlv),
        entry("p_right_via_u", "p_R = Δ(S(p̃¹))U(p̃²⊗1)", Canonical, 0, pplu),
        entry("u_v_via_p_q", "U = q̃¹₁p¹⊗q̃¹₂p²S(q̃²), V = q¹p̃¹₁⊗S⁻¹(p̃²)q²p̃¹₂", Canonical, 0, uv_pq),
        entry("u_associator", "x¹U¹⊗x²U²₁𝐔¹⊗x³U²₂𝐔² = S(X¹)₍₁,₁₎U¹₁X²⊗S(X¹)₍₁,₂₎U¹₂X³⊗S(X¹)₂U²", Canonical, 0, u_associator),
        entry("delta_invariance", "Δ(h₁)δ(S⊗S)(Δ^cop(h₂)) = ε(h)δ", Canonical, 1, fdelta_drinfeld),
        entry("delta_reassociated", "Y¹δ¹S(Y³₂)⊗Y²δ²S(Y³₁) = βS(p̃²)⊗S(p̃¹)", Canonical, 0, delta_phi),
        entry("p_left_reassociated", "z¹p̃¹⊗z²p̃²₁⊗z³p̃²₂ = Y²₁Z²S⁻¹(Y¹Z¹β)⊗Y²₂Z³⊗Y³", Canonical, 0, p_left_phi),
        entry("q_right_reassociated", "X¹⊗q¹X²₁⊗S⁻¹(X³)q²X²₂ = q¹₁x¹⊗q¹₂x²⊗q²x³", Canonical, 0, q_right_phi),
        entry("p_right_reassociated", "X¹p¹₁⊗X²p¹₂⊗X³p² = x¹⊗x²₁p¹⊗x²₂p²S(x³)", Canonical, 0, p_right_phi),
        entry("q_left_versus_q_right", "X¹⊗S(X²)q̃¹X³₁⊗q̃²X³₂ = q¹x¹₁⊗S(q²x¹₂)x²⊗x³", Canonical, 0, q_left_q_right),
        entry("p_left_versus_p_right", "x¹⊗x²S(x³₁p̃¹)⊗x³₂p̃² = X¹₁p¹⊗X¹₂p²S(X²)⊗X³", Canonical, 0, p_left_p_right),
        entry("twist_on_p_left", "S(p̃²)f¹⊗S(p̃¹)f² = q¹g¹₁⊗S⁻¹(g²)q²g¹₂", Canonical, 0, twist_p_left),
        entry("twist_on_p_right", "S(g¹)q̃¹g²₁⊗q̃²g²₂ = S(p²)f¹⊗S(p¹)f²", Canonical, 0, twist_p_right),
        entry(
            "delta_associator",
            "X¹₁x¹δ¹S(X³₂)⊗X¹₂x²δ²₁S(X³₁)₁⊗X²x³δ²₂S(X³₁)₂ = (X¹δ¹S(X³₂))₁g¹S(x³)⊗(X¹δ¹S(X³₂))₂g²S(x²)f¹⊗X²δ²S(x¹X³₁)f²",
            Canonical,
            0,
            delta_associator,
        ),
        entry("twist_v_gives_q_left", "f²V¹S⁻¹(f¹)₁⊗V²S⁻¹(f¹)₂ = q_L", Canonical, 0, twist_v_q_left),
        entry("u_q_left_gives_twist", "S(U¹)q̃¹U²₁⊗q̃²U²₂ = f", Canonical, 0, u_q_left_twist),
        entry("p_right_twist_alpha", "S(p¹)F²f²₂X³⊗S(p²f¹X¹)F¹f²₁X² = 1⊗α", Canonical, 0, p_right_twist_alpha),
        entry("modular_on_left_integral", "th = μ(h)t", Integrals, 1, mu_left_integral),
        entry("modular_on_right_integral", "hr = μ⁻¹(h)r", Integrals, 1, mu_right_integral),
        entry("modular_normalization", "μ(αβ)μ⁻¹(αβ) = 1, μ*μ⁻¹ = ε, μ∘S⁻¹ = μ⁻¹", Integrals, 0, mu_normalization),
        entry("left_integral_antipode_split", "t₁⊗S(t₂) = q¹t₁⊗S(q²t₂)β = βq¹t₁⊗S(q²t₂)", Integrals, 0, f2),
        entry("left_integral_moves", "t₁p¹h⊗t₂p² = μ(h₁)t₁p¹⊗t₂p²S(h₂)", Integrals, 1, moving_left_integral),
        entry("right_integral_moves", "r₁p¹h⊗r₂p² = r₁p¹⊗r₂p²S(h)", Integrals, 1, moving_right_integral),
        entry("q_and_p_on_integrals", "q¹t₁⊗q²t₂ = q̃¹t₁⊗q̃²t₂, r₁p¹⊗r₂p² = r₁p̃¹⊗r₂p̃²", Integrals, 0, qqt),
        entry("q_right_through_left_integral", "hq¹t₁⊗q²t₂ = q¹t₁⊗S⁻¹(h)q²t₂", Integrals, 1, q_moves_through_integral),
        entry("right_integral_left_factor", "hr₁⊗r₂ = μ⁻¹(h₁p¹)q¹r₁⊗S⁻¹(h₂p²)q²r₂", Integrals, 1, rint3),
        entry("right_integral_u", "r₁U¹⊗r₂U²S(h) = r₁U¹h⊗r₂U²", Integrals, 1, rint4),
        entry("right_integral_v", "V¹r₁⊗S⁻¹(h)V²r₂ = μ(h₁)h₂V¹r₁⊗V²r₂", Integrals, 1, rint5),
        entry("u_v_on_right_integral", "V¹r₁U¹⊗V²r₂U² = S⁻¹(q²t₂p²)⊗S⁻¹(q¹t₁p¹), t = S(r)", Integrals, 0, uv_on_right_integral),
        entry("q_p_on_right_integral", "q¹r₁p¹⊗q²r₂p² = μ(q̃¹)q̃²S⁻¹(q²t₂p²)⊗S⁻¹(q¹t₁p¹)", Integrals, 0, q_r_p_on_right_integral),
        entry("left_cointegral_coinvariance", "λ(V²h₂U²)V¹h₁U¹ = μ(x¹)λ(hS(x²))x³", Cointegrals, 1, charact_left_cointegral),
        entry(
            "left_cointegral_twisted_coinvariance",
            "λ(S⁻¹(f¹)h₂U²)S⁻¹(f²)h₁U¹ = μ(q¹₁x¹)λ(hS(q¹₂x²))q²x³",
            Cointegrals,
            1,
            alt_charact_left_cointegral,
        ),
        entry("left_cointegral_on_q_t_p", "λ(q²t₂p²)q¹t₁p¹ = μ(β)λ(t)1", Cointegrals, 0, prelim_cointegral),
        entry(
            "left_cointegral_two_variables",
            "λ(q²h₂p²S(h'))q¹h₁p¹ = μ(x¹)λ(S⁻¹(q̃¹)hS(x²h'₁p̃¹))q̃²x³h'₂p̃²",
            Cointegrals,
            2,
            lcoint_simpl,
        ),
        entry("left_cointegral_moves_antipode", "λ(S⁻¹(h)h') = μ(h₁)λ(h'S(h₂))", Cointegrals, 2, cointegral_moves_antipode),
        entry("modular_element_frobenius", "λ∘S⁻¹ = λ↼g, q¹t₁p¹⊗S(q²t₂p²) = q²t₂p²⊗g⁻¹S⁻¹(q¹t₁p¹)", Cointegrals, 0, first_radford),
        entry("modular_element_formulas", "λ(S⁻¹(q²t₂p²))S⁻¹(q¹t₁p¹) and λ(q¹t₁p¹)S(q²t₂p²) are inverse", Cointegrals, 0, modular_element_formulas),
        entry(
            "fourth_power_equivalent",
            "μ(f¹)S⁻²(h)S⁻¹(g⁻¹)S(f²) = μ(h₁f¹)μ⁻¹(h₍₂,₂₎)S⁻¹(g⁻¹)S(S(h₍₂,₁₎)f²)",
            Cointegrals,
            1,
            s4_equivalent,
        ),
        entry("frobenius_systems_via_u", "λ∘S⁻¹ = Λ↼u, q¹t₁p¹⊗S(q²t₂p²) = q̃¹t₁p̃¹⊗u⁻¹S(q̃²t₂p̃²)", Cointegrals, 0, frobenius_comparison_u),
        entry("u_inverse_formula", "u = μ(V¹)S²(V²), u⁻¹ = μ⁻¹(q¹₂g²S(q²))S(q¹₁g¹)", Cointegrals, 0, u_formulas),
        entry(
            "nakayama_inverse_on_cointegral",
            "μ⁻¹(q̃¹h₁p̃¹)λ↼S⁻¹(q̃²h₂p̃²) = μ⁻¹(α)μ(β)S(h)⇀λ",
            Cointegrals,
            2,
            inchi_left_cointegral,
        ),
        entry(
            "modular_element_normal_form",
            "λ(S⁻¹(f²)h₁g¹S(h'))S⁻¹(f¹)h₂g² = μ(f¹)μ⁻¹(U²₂𝐔²α)μ(β)μ(U¹y¹₂x²)λ(hS(y³x³₂h'₂p̃²))S⁻¹(g⁻¹y¹₁x¹)S(S(U²₁𝐔¹y²x³₁h'₁p̃¹)f²)",
            Cointegrals,
            2,
            norm_def_modular,
        ),
        entry(
            "modular_element_unreduced_form",
            "λ(S⁻¹(f²)h₁g¹S(h'))S⁻¹(f¹)h₂g² = μ(βf¹)μ⁻¹(Y³U²α)μ(Y¹U¹₁y²₁x¹)λ(hS(y³x³h'₂p̃²))S⁻¹(g⁻¹y¹)S(S(Y²U¹₂y²₂x²h'₁p̃¹)f²)",
            Cointegrals,
            2,
            fvf_unimodular_form,
        ),
        entry(
            "modular_on_twisted_cointegral",
            "μ(S⁻¹(f¹)h₂g²)λ(S⁻¹(f²)h₁g¹S(h')) = μ⁻¹(αg⁻¹)μ(q̃¹)μ(q̃²₁h'₁p̃¹)λ(hS(q̃²₂h'₂p̃²))",
            Cointegrals,
            2,
            mu_on_twisted_cointegral,
        ),
        entry("v_on_right_integral", "V¹r₁⊗g⁻¹V²r₂ = V²r₂p²⊗S²(V¹r₁p¹)α", Cointegrals, 0, app4),
        entry(
            "p_left_twist_on_right_integral",
            "S(p̃²)f¹r₁⊗g⁻¹S(p̃¹)f²r₂ = μ(S(p²)f¹)S(p¹)f²V²r₂P²⊗S²(V¹r₁P¹)α",
            Cointegrals,
            0,
            app3b,
        ),
    ]
}

/// Free-variable assignments: one evaluation with label legs when the
/// algebra is small or `exhaustive` is set, otherwise a fixed sample.
fn assignments(arity: usize, dim: usize, exhaustive: bool) -> Vec<Vec<Arg>> {
    const SAMPLES: usize = 16;
    if arity < 2 || dim <= 8 || exhaustive {
        return vec![vec![Arg::Label; arity]];
    }
    let mut rng = StdRng::seed_from_u64(0x5eed);
    (0..SAMPLES).map(|_| (0..arity).map(|_| Arg::Basis(rng.gen_range(0..dim))).collect()).collect()
}

impl<F: Field> Identity<F> {
    pub(crate) fn evaluate(&self, h: &QhaPresentation<F>, exhaustive: bool) -> ReportRow<F> {
        let c = match h.canonical() {
            Ok(c) => c,
            Err(e) => return ReportRow::error(self.name, e.to_string()),
        };
        let cx = Ctx { h, c };
        let mut checked = 0;
        for args in assignments(self.arity, h.dim(), exhaustive) {
            let pairs = match (self.eval)(&cx, &args) {
                Ok(p) => p,
                Err(e) => return ReportRow::error(self.name, e.to_string()),
            };
            for (i, (lhs, rhs)) in pairs.iter().enumerate() {
                let row = ReportRow::compare(self.name, lhs, rhs);
                if !row.passed() {
                    return row.with_detail(format!("part {} at {:?}", i + 1, args));
                }
                checked += 1;
            }
        }
        ReportRow::compare(self.name, &h.zero(1), &h.zero(1)).with_detail(format!("{checked} comparisons"))
    }
}
