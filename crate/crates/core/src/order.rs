use crate::error::{Error, Result};
use crate::monomial::{Monomial, Ring};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;

/// Lexicographic order given by a ranking of the ring variables,
/// most significant first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderSpec {
    var_order: Vec<usize>,
}

impl OrderSpec {
    pub fn lex(var_order: Vec<usize>) -> Result<OrderSpec> {
        let mut seen = vec![false; var_order.len()];
        for &v in &var_order {
            if v >= seen.len() || seen[v] {
                return Err(Error::Argument(format!(
                    "variable order {var_order:?} is not a permutation"
                )));
            }
            seen[v] = true;
        }
        Ok(OrderSpec { var_order })
    }

    /// `x1 > y1 > x2 > y2 > ... > xn > yn`.
    pub fn order_a(n: usize) -> OrderSpec {
        OrderSpec { var_order: (0..n).flat_map(|i| [i, n + i]).collect() }
    }

    /// `x1 > ... > xn > y1 > ... > yn`.
    pub fn order_b(n: usize) -> OrderSpec {
        OrderSpec { var_order: (0..2 * n).collect() }
    }

    /// Order A on paired rings, variable index order otherwise.
    pub fn default_for(ring: &Ring) -> OrderSpec {
        match ring.pairs() {
            Some(n) => OrderSpec::order_a(n),
            None => OrderSpec { var_order: (0..ring.nvars()).collect() },
        }
    }

    pub fn var_order(&self) -> &[usize] {
        &self.var_order
    }

    pub fn nvars(&self) -> usize {
        self.var_order.len()
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        for &v in &self.var_order {
            match a.0[v].cmp(&b.0[v]) {
                Ordering::Equal => continue,
                other => return other,
            }
        }
        Ordering::Equal
    }

    /// Sorts descending (largest first).
    pub fn sort_desc(&self, gens: &mut [Monomial]) {
        gens.sort_by(|a, b| self.cmp(b, a));
    }
}
