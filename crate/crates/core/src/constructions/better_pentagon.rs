use serde::{Deserialize, Serialize};

use super::{graph_algebra, labeled, Checks, PentagonReport};
use crate::algebra::FiniteAlgebra;
use crate::centrality::{require_congruence, Centralizer};
use crate::congruence::LabeledPentagon;
use crate::error::{Error, Result};
use crate::partition::Partition;

/// A pentagon `0 < β′ < α′`, `0 < δ′ < θ′ < α′` in a quotient of `A(β)` with
/// `C(α′,α′;β′)` and `C(θ′,θ′;0)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BetterPentagon {
    pub algebra: FiniteAlgebra,
    pub beta: Partition,
    pub delta: Partition,
    pub theta: Partition,
    pub alpha: Partition,
    pub report: PentagonReport,
}

impl BetterPentagon {
    pub fn pentagon(&self) -> LabeledPentagon {
        LabeledPentagon {
            bottom: Partition::zero(self.algebra.size()),
            beta: self.beta.clone(),
            delta: self.delta.clone(),
            theta: self.theta.clone(),
            top: self.alpha.clone(),
        }
    }
}

/// Requires `C(θ,θ;δ)` and not `C(β,θ;δ)` on the input pentagon.
pub fn better_pentagon(alg: &FiniteAlgebra, p: &LabeledPentagon) -> Result<BetterPentagon> {
    for (label, c) in [("beta", &p.beta), ("delta", &p.delta), ("theta", &p.theta)] {
        require_congruence(alg, c, label)?;
    }
    p.check_shape()?;
    let mut cz = Centralizer::new(alg);
    if !cz.centralizes(&p.theta, &p.theta, &p.delta) {
        return Err(Error::pre("C(theta,theta;delta) fails"));
    }
    if cz.centralizes(&p.beta, &p.theta, &p.delta) {
        return Err(Error::pre("C(beta,theta;delta) holds"));
    }

    let g = graph_algebra(alg, &p.beta)?;
    let d1 = g.lift(&p.delta, 1)?;
    let d2 = g.lift(&p.delta, 2)?;
    let dtheta = g.delta(alg, &p.theta)?;
    let low = d1.meet(&dtheta)?;
    let gamma1 = d1.join(&d2.meet(&dtheta)?)?;
    let gamma = g.project(&gamma1, 1);
    let psi = low.join(&d2.meet(&dtheta)?)?;
    let dgamma = g.delta(alg, &gamma)?;
    let omega = dgamma.join(&psi)?;

    let mut checks = Checks::default();
    checks.check("gamma is a congruence", alg.is_congruence(&gamma));
    checks.check("gamma1 is the lift of gamma", g.space.lift(&gamma, 1) == gamma1);
    checks.check("delta < gamma <= theta", p.delta.lt(&gamma) && gamma.leq(&p.theta));
    checks.check("delta1 meet Delta < delta1 < gamma1", low.lt(&d1) && d1.lt(&gamma1));
    checks.check("Psi < Omega", psi.lt(&omega));
    checks.check("delta1 join Psi = gamma1", d1.join_unchecked(&psi) == gamma1);
    checks.check("delta1 meet Omega = delta1 meet Delta", d1.meet_unchecked(&omega) == low);
    checks.check("delta1 meet Psi = delta1 meet Delta", d1.meet_unchecked(&psi) == low);
    checks.check("delta1 join Omega = gamma1", d1.join_unchecked(&omega) == gamma1);
    let mut gz = Centralizer::new(&g.algebra);
    checks.check("C(gamma1,gamma1;delta1)", gz.centralizes(&gamma1, &gamma1, &d1));
    checks.check("C(Omega,Omega;delta1 meet Omega)", gz.centralizes(&omega, &omega, &low));

    let (b, map) = g.algebra.quotient(&low)?;
    let m = b.size();
    let beta = d1.image(&map, m);
    let delta = psi.image(&map, m);
    let theta = omega.image(&map, m);
    let alpha = gamma1.image(&map, m);
    let shape = LabeledPentagon {
        bottom: Partition::zero(m),
        beta: beta.clone(),
        delta: delta.clone(),
        theta: theta.clone(),
        top: alpha.clone(),
    }
    .check_shape()
    .is_ok();
    checks.check("quotient labels form a pentagon", shape);
    let mut bz = Centralizer::new(&b);
    checks.check("C(alpha,alpha;beta)", bz.centralizes(&alpha, &alpha, &beta));
    checks.check("C(theta,theta;0)", bz.centralizes(&theta, &theta, &Partition::zero(m)));

    let report = PentagonReport {
        input: labeled(&[
            ("bottom", &p.bottom),
            ("beta", &p.beta),
            ("delta", &p.delta),
            ("theta", &p.theta),
            ("top", &p.top),
        ]),
        algebra: b.clone(),
        labels: labeled(&[
            ("gamma", &gamma),
            ("beta", &beta),
            ("delta", &delta),
            ("theta", &theta),
            ("alpha", &alpha),
        ]),
        assertions: checks.into_vec(),
    };
    Ok(BetterPentagon {
        algebra: b,
        beta,
        delta,
        theta,
        alpha,
        report,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn source() -> (FiniteAlgebra, LabeledPentagon) {
        let a = fixtures::z2s2();
        let p = LabeledPentagon::generated(fixtures::z2s2_beta(), fixtures::z2s2_delta(), fixtures::z2s2_theta()).unwrap();
        (a, p)
    }

    #[test]
    fn z2s2_better_pentagon_checks() {
        let (a, p) = source();
        let bp = better_pentagon(&a, &p).unwrap();
        assert!(bp.report.all_hold(), "{:?}", bp.report.failed());
        assert_eq!(bp.report.label("gamma"), Some(&p.theta));
        assert!(bp.pentagon().check_shape().is_ok());
    }

    #[test]
    fn preconditions_are_named() {
        let (a, p) = source();
        let swapped = LabeledPentagon {
            beta: p.theta.clone(),
            theta: p.beta.clone(),
            ..p.clone()
        };
        assert!(better_pentagon(&a, &swapped).is_err());
    }
}
