use crate::error::{Error, Result};
use crate::exact::{QLaurent, QRat};

/// `1 / a` modulo `q^{order+1}`; `a` may start at any power of `q`.
pub fn qseries_recip(a: &QLaurent, order: i64) -> Result<QLaurent> {
    Ok(QRat::from_laurent(a.clone()).try_recip()?.expand(order))
}

/// Jackson sum `(1 - Q) sum_{j>=0} Q^j f(Q^j)` for
/// `f(t) = sum_i n_i t^i / sum_i d_i t^i`, where the `n_i`, `d_i` are
/// Laurent polynomials in `q` and `q = Q^base_power`. The result is a
/// Laurent series in `Q` (printed with the tag `q`) modulo `Q^{q_order+1}`.
///
/// The node `j` contributes at `Q`-valuation at least
/// `j + min_i (base_power v(n_i) + i j)`, which strictly increases in `j`;
/// the sum stops once that bound passes `q_order`. Every `D(Q^j)` must be a
/// unit in `Q[[Q]]`.
pub fn jackson_sum_01(
    numer: &[QLaurent],
    denom: &[QLaurent],
    base_power: u32,
    q_order: i64,
) -> Result<QLaurent> {
    if base_power == 0 {
        return Err(Error::InvalidArgument("jackson_sum_01 needs base_power >= 1".into()));
    }
    let bp = base_power as i64;
    let numer: Vec<QLaurent> = numer.iter().map(|p| p.subst_power(bp)).collect();
    let denom: Vec<QLaurent> = denom.iter().map(|p| p.subst_power(bp)).collect();
    let mut total = QLaurent::zero();
    if numer.iter().all(QLaurent::is_zero) {
        return Ok(total);
    }
    for j in 0i64.. {
        let bound = j + numer
            .iter()
            .enumerate()
            .filter_map(|(i, p)| p.valuation().map(|v| v + i as i64 * j))
            .min()
            .expect("some numerator coefficient is nonzero");
        if bound > q_order {
            break;
        }
        let at_node = |coeffs: &[QLaurent]| -> QLaurent {
            coeffs
                .iter()
                .enumerate()
                .fold(QLaurent::zero(), |acc, (i, p)| &acc + &p.shift(i as i64 * j))
        };
        let n = at_node(&numer).shift(j);
        let d = at_node(&denom);
        if d.valuation() != Some(0) {
            return Err(Error::InvalidArgument(format!(
                "denominator is not a unit at node j = {j}"
            )));
        }
        let term = QRat::new(&n, &d)?.expand(q_order);
        total = &total + &term;
    }
    let one_minus_q = QLaurent::from_ints(0, &[1, -1]);
    Ok((&total * &one_minus_q).truncate(q_order))
}
