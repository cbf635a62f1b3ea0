use super::binomial::ExtRing;
use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::order::OrderSpec;
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum BlockKind {
    /// Lexicographic, variables listed most significant first.
    Lex,
    /// Graded reverse lexicographic, variables listed most significant first.
    DegRevLex,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Block {
    pub vars: Vec<usize>,
    pub kind: BlockKind,
}

/// Block (product) order: blocks are compared in turn, the first block
/// that distinguishes two monomials decides.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtOrder {
    blocks: Vec<Block>,
}

/// Monomial order on the t-variables, given by t-indices most significant first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum TOrder {
    Lex(Vec<usize>),
    DegRevLex(Vec<usize>),
}

impl TOrder {
    /// `t_i > t_j` iff `u_i > u_j`; with generators in canonical descending
    /// order this is lex with `t_1 > t_2 > ... > t_m`.
    pub fn lex_by_generators(m: usize) -> TOrder {
        TOrder::Lex((0..m).collect())
    }

    fn block(&self, ring: &ExtRing) -> Result<Block> {
        let (vars, kind) = match self {
            TOrder::Lex(v) => (v, BlockKind::Lex),
            TOrder::DegRevLex(v) => (v, BlockKind::DegRevLex),
        };
        if let Some(&bad) = vars.iter().find(|&&j| j >= ring.n_t()) {
            return Err(Error::Argument(format!("t-order mentions t{} of {}", bad + 1, ring.n_t())));
        }
        Ok(Block { vars: vars.iter().map(|&j| ring.t(j)).collect(), kind })
    }
}

impl ExtOrder {
    pub fn from_blocks(blocks: Vec<Block>, nvars: usize) -> Result<ExtOrder> {
        let mut seen = vec![false; nvars];
        for v in blocks.iter().flat_map(|b| &b.vars) {
            if *v >= nvars || seen[*v] {
                return Err(Error::Argument("order blocks must partition the variables".into()));
            }
            seen[*v] = true;
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::Argument("order blocks must partition the variables".into()));
        }
        Ok(ExtOrder { blocks })
    }

    /// Base part compared by `base` first, ties broken by `t_order`.
    pub fn product(ring: &ExtRing, base: &OrderSpec, t_order: &TOrder) -> Result<ExtOrder> {
        let mut blocks = Vec::new();
        if let Some(s) = ring.s() {
            blocks.push(Block { vars: vec![s], kind: BlockKind::Lex });
        }
        blocks.push(Block { vars: base.var_order().to_vec(), kind: BlockKind::Lex });
        blocks.push(t_order.block(ring)?);
        ExtOrder::from_blocks(blocks, ring.nvars())
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    /// The same order with the leading block dropped (used after eliminating `s`).
    pub fn without_first_block(&self) -> ExtOrder {
        let removed: Vec<usize> = self.blocks[0].vars.clone();
        let shift = |v: usize| v - removed.iter().filter(|&&r| r < v).count();
        ExtOrder {
            blocks: self.blocks[1..]
                .iter()
                .map(|b| Block { vars: b.vars.iter().map(|&v| shift(v)).collect(), kind: b.kind })
                .collect(),
        }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        for block in &self.blocks {
            let ord = match block.kind {
                BlockKind::Lex => lex(&block.vars, a, b),
                BlockKind::DegRevLex => {
                    let da: u32 = block.vars.iter().map(|&v| a.0[v] as u32).sum();
                    let db: u32 = block.vars.iter().map(|&v| b.0[v] as u32).sum();
                    da.cmp(&db).then_with(|| {
                        for &v in block.vars.iter().rev() {
                            match a.0[v].cmp(&b.0[v]) {
                                Ordering::Equal => continue,
                                o => return o.reverse(),
                            }
                        }
                        Ordering::Equal
                    })
                }
            };
            if ord != Ordering::Equal {
                return ord;
            }
        }
        Ordering::Equal
    }
}

fn lex(vars: &[usize], a: &Monomial, b: &Monomial) -> Ordering {
    for &v in vars {
        match a.0[v].cmp(&b.0[v]) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
}
