use serde::{Deserialize, Serialize};

use super::{graph_algebra, transport, Assertion, Checks};
use crate::algebra::FiniteAlgebra;
use crate::centrality::{matrix_set, require_congruence, Centralizer};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::subpower::DEFAULT_CLOSURE_BUDGET;

/// The alternating chains `ηᵏ`, `Δ^{2m+1}`, `Γ^{2n}` on `D = b(ᾱ)` and the
/// quotient `E = D/η^∞` where `[x,y] = [x,z] = 0 < [x,y∨z]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HerringboneState {
    pub d: FiniteAlgebra,
    pub pairs: Vec<(usize, usize)>,
    pub eta: Partition,
    pub delta: Partition,
    pub gamma: Partition,
    /// `η⁰, η¹, …` up to the first index repeating twice.
    pub etas: Vec<Partition>,
    /// `Δ¹, Δ³, …`
    pub deltas: Vec<Partition>,
    /// `Γ², Γ⁴, …`
    pub gammas: Vec<Partition>,
    /// Least `k` with `ηᵏ = ηᵏ⁺¹`.
    pub stable_at: usize,
    pub eta_limit: Partition,
    pub delta_limit: Partition,
    pub gamma_limit: Partition,
    /// Lexicographically least `(p,q,r,s)` in `M(ᾱ,θ̄)` with `p = q`, `r ≠ s`.
    pub matrix: [usize; 4],
    /// Its image in `D`, as indices into `pairs`.
    pub d_quad: [usize; 4],
    /// The `θ̄₁∧θ̄₂`-class of `(r,r)`.
    pub u: Vec<usize>,
    pub e: FiniteAlgebra,
    pub x: Partition,
    pub y: Partition,
    pub z: Partition,
    pub assertions: Vec<Assertion>,
}

impl HerringboneState {
    pub fn all_hold(&self) -> bool {
        self.assertions.iter().all(|a| a.holds)
    }

    pub fn failed(&self) -> Vec<&str> {
        self.assertions.iter().filter(|a| !a.holds).map(|a| a.name.as_str()).collect()
    }

    /// `ηᵏ`, constant past stabilization.
    pub fn eta_at(&self, k: usize) -> &Partition {
        self.etas.get(k).unwrap_or(&self.eta_limit)
    }

    /// `Δ^{2m+1}`.
    pub fn delta_at(&self, m: usize) -> &Partition {
        self.deltas.get(m).unwrap_or(&self.delta_limit)
    }

    /// `Γ^{2n}` for `n ≥ 1`.
    pub fn gamma_at(&self, n: usize) -> &Partition {
        self.gammas.get(n - 1).unwrap_or(&self.gamma_limit)
    }
}

fn closed(set: &[&Partition]) -> bool {
    set.iter().all(|a| {
        set.iter()
            .all(|b| set.contains(&&a.meet_unchecked(b)) && set.contains(&&a.join_unchecked(b)))
    })
}

fn chain(v: &[Partition]) -> bool {
    v.windows(2).all(|w| w[0].leq(&w[1]))
}

/// Requires `0 < θ̄ < ᾱ`, `[θ̄,ᾱ] = 0` and `[ᾱ,θ̄] = θ̄` in `b`.
pub fn herringbone(b: &FiniteAlgebra, theta: &Partition, alpha: &Partition) -> Result<HerringboneState> {
    require_congruence(b, theta, "theta")?;
    require_congruence(b, alpha, "alpha")?;
    if theta.is_zero() || !theta.lt(alpha) {
        return Err(Error::pre("need 0 < theta < alpha"));
    }
    let mut bz = Centralizer::new(b);
    if !bz.commutator(theta, alpha).is_zero() {
        return Err(Error::pre("[theta,alpha] is not 0"));
    }
    if bz.commutator(alpha, theta) != *theta {
        return Err(Error::pre("[alpha,theta] is not theta"));
    }

    let g = graph_algebra(b, alpha)?;
    let n = g.size();
    let delta = g.delta(b, theta)?;
    let t1 = g.lift(theta, 1)?;
    let t2 = g.lift(theta, 2)?;
    let gamma = t1.meet(&g.eta2)?;
    let eta = g.eta1.clone();

    let mut etas = vec![Partition::zero(n)];
    let mut deltas = Vec::new();
    let mut gammas = Vec::new();
    loop {
        let k = etas.len();
        let prev = &etas[k - 1];
        let next = if k % 2 == 1 {
            let d = delta.join_unchecked(prev);
            let e = eta.meet_unchecked(&d);
            deltas.push(d);
            e
        } else {
            let c = gamma.join_unchecked(prev);
            let e = eta.meet_unchecked(&c);
            gammas.push(c);
            e
        };
        let done = k >= 2 && next == etas[k - 1] && next == etas[k - 2];
        etas.push(next);
        if done {
            break;
        }
    }
    let stable_at = (0..etas.len() - 1).find(|&k| etas[k] == etas[k + 1]).unwrap_or(0);
    let eta_limit = etas.last().cloned().unwrap_or_else(|| Partition::zero(n));
    let delta_limit = delta.join_unchecked(&eta_limit);
    let gamma_limit = gamma.join_unchecked(&eta_limit);
    let dg = delta.join_unchecked(&gamma);

    let mut checks = Checks::default();
    checks.check(
        "eta chain increases to a limit below eta meet (Delta join Gamma)",
        chain(&etas) && eta_limit.leq(&eta.meet_unchecked(&dg)),
    );
    checks.check(
        "Delta and Gamma chains increase below Delta join Gamma",
        chain(&deltas) && chain(&gammas) && deltas.iter().chain(&gammas).all(|p| p.leq(&dg)),
    );
    checks.check(
        "eta meet Delta limit = eta limit = eta meet Gamma limit",
        eta.meet_unchecked(&delta_limit) == eta_limit && eta.meet_unchecked(&gamma_limit) == eta_limit,
    );
    checks.check(
        "Delta limit join Gamma limit = Delta join Gamma <= theta1 meet theta2",
        delta_limit.join_unchecked(&gamma_limit) == dg && dg.leq(&t1.meet_unchecked(&t2)),
    );

    let mut st = HerringboneState {
        d: g.algebra.clone(),
        pairs: g.space.pairs().to_vec(),
        eta: eta.clone(),
        delta: delta.clone(),
        gamma: gamma.clone(),
        etas,
        deltas,
        gammas,
        stable_at,
        eta_limit: eta_limit.clone(),
        delta_limit,
        gamma_limit,
        matrix: [0; 4],
        d_quad: [0; 4],
        u: Vec::new(),
        e: g.algebra.clone(),
        x: eta.clone(),
        y: delta.clone(),
        z: gamma.clone(),
        assertions: Vec::new(),
    };

    let span = st.etas.len() + 2;
    let mut sublattices = true;
    let mut table = true;
    for m in 0..span / 2 + 1 {
        let odd = [st.eta_at(2 * m + 1), st.eta_at(2 * m + 2), st.eta_at(2 * m + 3), st.delta_at(m), st.delta_at(m + 1)];
        sublattices &= closed(&odd);
        if m >= 1 {
            let even = [st.eta_at(2 * m), st.eta_at(2 * m + 1), st.eta_at(2 * m + 2), st.gamma_at(m), st.gamma_at(m + 1)];
            sublattices &= closed(&even);
        }
        for k in 0..span {
            let d = st.delta_at(m);
            table &= st.eta_at(k).meet_unchecked(d) == *st.eta_at(k.min(2 * m + 1));
            table &= st.eta_at(k).join_unchecked(d) == *st.delta_at(m.max(k / 2));
            if m >= 1 {
                let c = st.gamma_at(m);
                table &= st.eta_at(k).meet_unchecked(c) == *st.eta_at(k.min(2 * m));
                table &= st.eta_at(k).join_unchecked(c) == *st.gamma_at(m.max(k.div_ceil(2)).max(1));
            }
        }
    }
    checks.check("consecutive terms form sublattices", sublattices);
    checks.check("meets and joins of eta with Delta and Gamma follow the index rule", table);

    let mm = matrix_set(b, alpha, theta, DEFAULT_CLOSURE_BUDGET)?;
    let found = mm
        .quads()
        .enumerate()
        .filter(|(_, q)| q[0] == q[1] && q[2] != q[3])
        .min_by_key(|&(_, q)| q);
    let Some((idx, quad)) = found else {
        return Err(Error::Validation("no quadruple with p = q and r != s".into()));
    };
    let at = |x: usize, y: usize| g.space.index_of(x, y);
    let lift = |t: [usize; 4]| Some([at(t[2], t[0])?, at(t[2], t[1])?, at(t[2], t[2])?, at(t[2], t[3])?]);
    let leaves_ok = mm.generators().iter().all(|&t| match lift(t) {
        Some([a, b, c, d]) => (a == b && c == d && eta.related(a, c)) || (a == c && b == d && dg.related(a, b)),
        None => false,
    });
    checks.check("transported generators lie in M(eta, Delta join Gamma)", leaves_ok);
    let image = transport(&mm, idx, &g.algebra, lift)?;
    let d_quad = lift(quad).ok_or_else(|| Error::Validation("quadruple leaves b(alpha)".into()))?;
    checks.check("transported term reproduces the quadruple", image == d_quad);

    let tt = t1.meet_unchecked(&t2);
    let u: Vec<usize> = (0..n).filter(|&i| tt.related(i, d_quad[2])).collect();
    checks.check("eta1 is equality on U", st.eta_at(1).restrict(&u).is_zero());
    checks.check("eta limit is equality on U", eta_limit.restrict(&u).is_zero());
    checks.check("(r,r) and (r,s) are distinct modulo the eta limit", !eta_limit.related(d_quad[2], d_quad[3]));

    let (e, map) = g.algebra.quotient(&eta_limit)?;
    let size = e.size();
    let x = eta.image(&map, size);
    let y = st.delta_limit.image(&map, size);
    let z = st.gamma_limit.image(&map, size);
    let mut ez = Centralizer::new(&e);
    checks.check("[x,y] = 0", ez.commutator(&x, &y).is_zero());
    checks.check("[x,z] = 0", ez.commutator(&x, &z).is_zero());
    let yz = y.join_unchecked(&z);
    checks.check("[x,y join z] > 0", !ez.commutator(&x, &yz).is_zero());

    st.matrix = quad;
    st.d_quad = d_quad;
    st.u = u;
    st.e = e;
    st.x = x;
    st.y = y;
    st.z = z;
    st.assertions = checks.into_vec();
    Ok(st)
}
