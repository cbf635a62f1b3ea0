use super::lp::in_scaled_hull;
use super::{Method, NormalityCertificate, Verdict};
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::ideal::{power, MonomialIdeal};
use crate::monomial::Monomial;
use crate::par;

const UNKNOWN: u8 = 0;
const MEMBER: u8 = 1;
const OUTSIDE: u8 = 2;

/// Mixed-radix box `[0, bound_0] x ... x [0, bound_{n-1}]`, last coordinate fastest.
struct LatticeBox {
    bounds: Vec<u32>,
    strides: Vec<usize>,
    size: usize,
}

impl LatticeBox {
    fn new(bounds: Vec<u32>, cap: usize) -> Result<LatticeBox> {
        let mut strides = vec![0; bounds.len()];
        let mut size = 1usize;
        for (i, &b) in bounds.iter().enumerate().rev() {
            strides[i] = size;
            size = size
                .checked_mul(b as usize + 1)
                .filter(|&s| s <= cap)
                .ok_or(Error::Resource { what: "closure box points", cap })?;
        }
        Ok(LatticeBox { bounds, strides, size })
    }

    fn point(&self, mut idx: usize) -> Vec<u32> {
        self.strides
            .iter()
            .map(|&s| {
                let c = idx / s;
                idx %= s;
                c as u32
            })
            .collect()
    }
}

/// Necessary conditions for `a` in `k * NP(I)`, from nonnegative functionals.
struct Cuts {
    degree: u32,
    single: Vec<u32>,
    pairs: Vec<(usize, usize, u32)>,
}

impl Cuts {
    fn new(gens: &[Monomial], k: u32) -> Cuts {
        let nv = gens[0].nvars();
        let min_over = |f: &dyn Fn(&Monomial) -> u32| gens.iter().map(f).min().unwrap_or(0) * k;
        let degree = min_over(&|g| g.degree());
        let single = (0..nv).map(|p| min_over(&|g| g.0[p] as u32)).collect();
        let mut pairs = Vec::new();
        for p in 0..nv {
            for r in p + 1..nv {
                let c = min_over(&|g| g.0[p] as u32 + g.0[r] as u32);
                if c > 0 {
                    pairs.push((p, r, c));
                }
            }
        }
        Cuts { degree, single, pairs }
    }

    fn admits(&self, a: &[u32]) -> bool {
        a.iter().sum::<u32>() >= self.degree
            && a.iter().zip(&self.single).all(|(x, s)| x >= s)
            && self.pairs.iter().all(|&(p, r, c)| a[p] + a[r] >= c)
    }
}

/// Integral closure of `I^k` from the lattice points of `k * NP(I)`.
///
/// Minimal generators lie in the box with coordinate `i` at most
/// `k * max_j v_j[i]`. Points are settled cheaply where possible (membership
/// in `I^k`, linear cuts, a member predecessor) and by exact LP otherwise.
pub fn closure_power(ideal: &MonomialIdeal, k: u32, caps: &Caps) -> Result<MonomialIdeal> {
    if k == 0 {
        return Err(Error::Argument("closure exponent must be at least 1".into()));
    }
    if ideal.is_zero() || ideal.is_unit() {
        return Ok(ideal.clone());
    }
    let gens = ideal.gens();
    let nv = ideal.ring().nvars();
    let bounds: Vec<u32> = (0..nv).map(|p| k * gens.iter().map(|g| g.0[p] as u32).max().unwrap_or(0)).collect();
    let lattice = LatticeBox::new(bounds, caps.box_points)?;
    let ik = power(ideal, k)?;
    let cuts = Cuts::new(gens, k);
    let exps: Vec<Vec<u16>> = gens.iter().map(|g| g.0.clone()).collect();

    let mut state: Vec<u8> = par::map_range(lattice.size, |idx| {
        let a = lattice.point(idx);
        if !cuts.admits(&a) {
            OUTSIDE
        } else if ik.gens().iter().any(|g| g.0.iter().zip(&a).all(|(&e, &x)| e as u32 <= x)) {
            MEMBER
        } else {
            UNKNOWN
        }
    });

    // unknown points by total degree; predecessors sit one degree lower
    let max_deg: u32 = lattice.bounds.iter().sum();
    let mut levels: Vec<Vec<usize>> = vec![Vec::new(); max_deg as usize + 1];
    for (idx, &s) in state.iter().enumerate() {
        if s == UNKNOWN {
            levels[lattice.point(idx).iter().sum::<u32>() as usize].push(idx);
        }
    }
    for level in levels {
        let mut open = Vec::new();
        for idx in level {
            let a = lattice.point(idx);
            let pred = (0..nv).any(|i| a[i] > 0 && state[idx - lattice.strides[i]] == MEMBER);
            if pred {
                state[idx] = MEMBER;
            } else {
                open.push(idx);
            }
        }
        let verdicts = par::map(&open, |&idx| in_scaled_hull(&exps, &lattice.point(idx), k));
        for (idx, inside) in open.into_iter().zip(verdicts) {
            state[idx] = if inside { MEMBER } else { OUTSIDE };
        }
    }

    let minimal: Vec<Monomial> = (0..lattice.size)
        .filter(|&idx| state[idx] == MEMBER)
        .filter_map(|idx| {
            let a = lattice.point(idx);
            let minimal = (0..nv).all(|i| a[i] == 0 || state[idx - lattice.strides[i]] != MEMBER);
            minimal.then(|| Monomial(a.into_iter().map(|x| x as u16).collect()))
        })
        .collect();
    Ok(MonomialIdeal::from_parts(ideal.ring().clone(), minimal))
}

/// Number of powers that must be integrally closed for normality of a
/// monomial ideal in `nvars` variables.
pub fn rrv_bound(nvars: usize) -> u32 {
    nvars.saturating_sub(1).max(1) as u32
}

const RRV: &str = "Reid-Roberts-Vitulli: a monomial ideal in d variables whose powers I^1..I^(d-1) are integrally closed is normal";

/// Compares `closure_power(I, k)` with `I^k` for `k = 1..K`, where `K` is
/// the smaller of `k_bound` and [`rrv_bound`].
pub fn normality_certify(ideal: &MonomialIdeal, k_bound: Option<u32>, caps: &Caps) -> Result<NormalityCertificate> {
    let full = rrv_bound(ideal.ring().nvars());
    let limit = k_bound.map_or(full, |b| b.min(full));
    let mut cert = NormalityCertificate {
        method: Method::LatticePoints,
        checked_k: Vec::new(),
        verdict: Verdict::IntegrallyClosedUpToK { k: 0 },
        criterion: None,
        tree: None,
        notes: Vec::new(),
    };
    for k in 1..=limit {
        let closure = match closure_power(ideal, k, caps) {
            Ok(c) => c,
            Err(e @ Error::Resource { .. }) if k > 1 => {
                cert.notes.push(format!("stopped at k = {k}: {e}"));
                return Ok(cert);
            }
            Err(e) => return Err(e),
        };
        let ik = power(ideal, k)?;
        if let Some(w) = closure.gens().iter().find(|g| !ik.contains(g)) {
            cert.checked_k.push(k);
            cert.verdict = Verdict::Failed { witness: w.clone(), k };
            return Ok(cert);
        }
        cert.checked_k.push(k);
        cert.verdict = Verdict::IntegrallyClosedUpToK { k };
    }
    if limit == full {
        cert.verdict = Verdict::CertifiedNormal;
        cert.criterion = Some(RRV.to_string());
    }
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{fix1, fix3};
    use crate::ideal::cover_ideal;
    use crate::monomial::Ring;

    fn j(g: &crate::graph::Graph) -> MonomialIdeal {
        cover_ideal(g, &Caps::default()).unwrap().ideal
    }

    #[test]
    fn squares_gain_the_mixed_term() {
        let ring = Ring::paired(1);
        let i = MonomialIdeal::new(ring.clone(), vec![Monomial(vec![2, 0]), Monomial(vec![0, 2])]).unwrap();
        let c = closure_power(&i, 1, &Caps::default()).unwrap();
        let want = MonomialIdeal::new(ring, vec![Monomial(vec![2, 0]), Monomial(vec![1, 1]), Monomial(vec![0, 2])]).unwrap();
        assert_eq!(c, want);
        let cert = normality_certify(&i, None, &Caps::default()).unwrap();
        assert_eq!(cert.verdict, Verdict::Failed { witness: Monomial(vec![1, 1]), k: 1 });
    }

    #[test]
    fn whisker_fixtures_are_closed() {
        let i1 = j(&fix1());
        assert_eq!(closure_power(&i1, 2, &Caps::default()).unwrap(), power(&i1, 2).unwrap());
        let i3 = j(&fix3());
        assert_eq!(closure_power(&i3, 3, &Caps::default()).unwrap(), power(&i3, 3).unwrap());
    }

    #[test]
    fn certificates() {
        let c3 = normality_certify(&j(&fix3()), None, &Caps::default()).unwrap();
        assert_eq!((c3.verdict, c3.checked_k), (Verdict::CertifiedNormal, vec![1]));
        let c1 = normality_certify(&j(&fix1()), None, &Caps::default()).unwrap();
        assert_eq!((c1.verdict, c1.checked_k), (Verdict::CertifiedNormal, vec![1, 2, 3]));
        let c1b = normality_certify(&j(&fix1()), Some(2), &Caps::default()).unwrap();
        assert_eq!(c1b.verdict, Verdict::IntegrallyClosedUpToK { k: 2 });
        assert!(c1b.criterion.is_none());
    }

    #[test]
    fn box_cap() {
        let caps = Caps { box_points: 10, ..Caps::default() };
        assert!(matches!(closure_power(&j(&fix1()), 2, &caps), Err(Error::Resource { .. })));
    }
}
