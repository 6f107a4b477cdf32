//! Exhaustive search for linear orders compatible with the operation.

use serde::{Deserialize, Serialize};

use super::{FiniteQuandle, QuandleError};

/// Default size bound for the order search.
pub const ORDER_BOUND: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OrderSide {
    /// `x < y` implies `z*x < z*y`.
    Left,
    /// `x < y` implies `x*z < y*z`.
    Right,
    Bi,
}

/// How the left condition treats `z*x = z*y`.
///
/// Right translations are bijections, so the right condition is the same
/// under both semantics.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OrderSemantics {
    /// `x < y` implies `z*x ≤ z*y`.
    #[default]
    Weak,
    /// `x < y` implies `z*x < z*y`.
    Strict,
}

struct OrderSearch<'a> {
    q: &'a FiniteQuandle,
    side: OrderSide,
    semantics: OrderSemantics,
    rank: Vec<usize>,
    placed: Vec<usize>,
}

const UNPLACED: usize = usize::MAX;

impl OrderSearch<'_> {
    /// `Some(true)` if `a < b` is already decided, `Some(false)` if `b ≤ a`
    /// is decided, `None` if both are still unplaced and distinct.
    fn less(&self, a: usize, b: usize) -> Option<bool> {
        if a == b {
            return Some(false);
        }
        match (self.rank[a], self.rank[b]) {
            (UNPLACED, UNPLACED) => None,
            (UNPLACED, _) => Some(false),
            (_, UNPLACED) => Some(true),
            (ra, rb) => Some(ra < rb),
        }
    }

    fn consistent(&self) -> bool {
        let n = self.q.size();
        let left = matches!(self.side, OrderSide::Left | OrderSide::Bi);
        let right = matches!(self.side, OrderSide::Right | OrderSide::Bi);
        for &x in &self.placed {
            for y in 0..n {
                if self.less(x, y) != Some(true) {
                    continue;
                }
                for z in 0..n {
                    if left {
                        let (p, q) = (self.q.op(z, x), self.q.op(z, y));
                        let ok = match self.semantics {
                            OrderSemantics::Strict => self.less(p, q) != Some(false),
                            OrderSemantics::Weak => p == q || self.less(q, p) != Some(true),
                        };
                        if !ok {
                            return false;
                        }
                    }
                    if right && self.less(self.q.op(x, z), self.q.op(y, z)) == Some(false) {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn run(&mut self) -> bool {
        let n = self.q.size();
        if self.placed.len() == n {
            return true;
        }
        for e in 0..n {
            if self.rank[e] != UNPLACED {
                continue;
            }
            self.rank[e] = self.placed.len();
            self.placed.push(e);
            if self.consistent() && self.run() {
                return true;
            }
            self.placed.pop();
            self.rank[e] = UNPLACED;
        }
        false
    }
}

impl FiniteQuandle {
    /// A compatible linear order (smallest element first) under the default
    /// weak semantics, or `None` after exhausting all orders.
    pub fn search_linear_order(&self, side: OrderSide) -> Result<Option<Vec<usize>>, QuandleError> {
        self.search_linear_order_with(side, OrderSemantics::default())
    }

    pub fn search_linear_order_with(
        &self,
        side: OrderSide,
        semantics: OrderSemantics,
    ) -> Result<Option<Vec<usize>>, QuandleError> {
        if self.size() > ORDER_BOUND {
            return Err(QuandleError::BoundExceeded {
                size: self.size(),
                bound: ORDER_BOUND,
            });
        }
        let mut s = OrderSearch {
            q: self,
            side,
            semantics,
            rank: vec![UNPLACED; self.size()],
            placed: Vec::new(),
        };
        Ok(s.run().then_some(s.placed))
    }

    /// Checks a complete order given smallest-first.
    pub fn is_compatible_order(&self, order: &[usize], side: OrderSide, semantics: OrderSemantics) -> bool {
        let n = self.size();
        let mut rank = vec![UNPLACED; n];
        for (i, &e) in order.iter().enumerate() {
            if e >= n || rank[e] != UNPLACED {
                return false;
            }
            rank[e] = i;
        }
        if order.len() != n {
            return false;
        }
        let s = OrderSearch {
            q: self,
            side,
            semantics,
            rank,
            placed: order.to_vec(),
        };
        s.consistent()
    }
}
