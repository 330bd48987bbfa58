use crate::exactnum::Field;
use crate::multilinear::{LinearOperator, StructureConstants, TensorElement};

use super::{QhaError, QhaPresentation, RawPresentation};

/// Opposite, coopposite and opposite-coopposite structures.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    Op,
    Cop,
    OpCop,
}

impl Variant {
    pub fn suffix(self) -> &'static str {
        match self {
            Variant::Op => "op",
            Variant::Cop => "cop",
            Variant::OpCop => "opcop",
        }
    }
}

fn flip<F: Field>(t: &TensorElement<F>) -> TensorElement<F> {
    let order: Vec<usize> = (0..t.rank()).rev().collect();
    t.permute_legs(&order)
}

impl<F: Field> QhaPresentation<F> {
    /// The requested variant. The result is not re-validated; the axioms
    /// transfer by construction.
    pub fn variant(&self, which: Variant) -> Result<QhaPresentation<F>, QhaError> {
        let sinv = self.antipode_inverse()?;
        let r = &self.raw;
        let raw = match which {
            Variant::Op => RawPresentation {
                name: format!("{}^op", r.name),
                labels: r.labels.clone(),
                mult: StructureConstants::from_entries(
                    self.dim(),
                    r.mult.entries().map(|(i, j, k, c)| (j, i, k, c.clone())),
                ),
                unit: r.unit.clone(),
                coproduct: r.coproduct.clone(),
                counit: r.counit.clone(),
                phi: r.phi_inv.clone(),
                phi_inv: r.phi.clone(),
                antipode: (*sinv).clone(),
                alpha: sinv.apply(&r.beta),
                beta: sinv.apply(&r.alpha),
            },
            Variant::Cop => {
                let columns = r.coproduct.columns().iter().map(flip).collect();
                RawPresentation {
                    name: format!("{}^cop", r.name),
                    labels: r.labels.clone(),
                    mult: r.mult.clone(),
                    unit: r.unit.clone(),
                    coproduct: LinearOperator::new(1, 2, self.dim(), columns)?,
                    counit: r.counit.clone(),
                    phi: flip(&r.phi_inv),
                    phi_inv: flip(&r.phi),
                    antipode: (*sinv).clone(),
                    alpha: sinv.apply(&r.alpha),
                    beta: sinv.apply(&r.beta),
                }
            }
            Variant::OpCop => {
                let mut raw = self.variant(Variant::Op)?.variant(Variant::Cop)?.raw;
                raw.name = format!("{}^opcop", r.name);
                raw
            }
        };
        QhaPresentation::unchecked(raw)
    }
}
