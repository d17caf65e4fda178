//! Finite algebras given by operation tables.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::term::Term;

/// A basic operation stored as a flattened table.
///
/// Argument tuples are ordered lexicographically with the first argument most
/// significant, so `f(a0, .., a{k-1})` lives at index `sum a_i * n^(k-1-i)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OperationTable {
    pub name: String,
    pub arity: usize,
    pub table: Vec<usize>,
}

impl OperationTable {
    pub fn new(name: impl Into<String>, arity: usize, table: Vec<usize>) -> Self {
        OperationTable {
            name: name.into(),
            arity,
            table,
        }
    }

    /// Tabulates `f` over all argument tuples of a universe of size `n`.
    pub fn from_fn(name: impl Into<String>, arity: usize, n: usize, mut f: impl FnMut(&[usize]) -> usize) -> Self {
        let len = checked_pow(n, arity).expect("operation table too large");
        let mut args = vec![0; arity];
        let mut table = Vec::with_capacity(len);
        for _ in 0..len {
            table.push(f(&args));
            increment(&mut args, n);
        }
        OperationTable::new(name, arity, table)
    }
}

/// A finite algebra with universe `{0, .., size-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawAlgebra")]
pub struct FiniteAlgebra {
    name: String,
    size: usize,
    operations: Vec<OperationTable>,
}

#[derive(Deserialize)]
struct RawAlgebra {
    name: String,
    size: usize,
    #[serde(default)]
    operations: Vec<OperationTable>,
}

impl TryFrom<RawAlgebra> for FiniteAlgebra {
    type Error = Error;

    fn try_from(raw: RawAlgebra) -> Result<Self> {
        FiniteAlgebra::new(raw.name, raw.size, raw.operations)
    }
}

impl FiniteAlgebra {
    pub fn new(name: impl Into<String>, size: usize, operations: Vec<OperationTable>) -> Result<Self> {
        let name = name.into();
        if size == 0 {
            return Err(Error::Validation(format!("algebra {name:?} has empty universe")));
        }
        for op in &operations {
            let expected = checked_pow(size, op.arity).ok_or_else(|| {
                Error::Validation(format!("operation {:?} table size overflows", op.name))
            })?;
            if op.table.len() != expected {
                return Err(Error::Validation(format!(
                    "operation {:?} of arity {} needs {} entries, found {}",
                    op.name,
                    op.arity,
                    expected,
                    op.table.len()
                )));
            }
            if let Some(pos) = op.table.iter().position(|&v| v >= size) {
                return Err(Error::Validation(format!(
                    "operation {:?} entry {} is {} (universe size {})",
                    op.name, pos, op.table[pos], size
                )));
            }
        }
        Ok(FiniteAlgebra {
            name,
            size,
            operations,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn operations(&self) -> &[OperationTable] {
        &self.operations
    }

    pub fn op_count(&self) -> usize {
        self.operations.len()
    }

    pub fn arity(&self, op: usize) -> usize {
        self.operations[op].arity
    }

    pub fn op_index(&self, name: &str) -> Option<usize> {
        self.operations.iter().position(|o| o.name == name)
    }

    pub fn signature(&self) -> Vec<(&str, usize)> {
        self.operations
            .iter()
            .map(|o| (o.name.as_str(), o.arity))
            .collect()
    }

    /// Table lookup without range checks.
    #[inline]
    pub fn apply(&self, op: usize, args: &[usize]) -> usize {
        let t = &self.operations[op];
        let idx = args.iter().fold(0, |acc, &a| acc * self.size + a);
        t.table[idx]
    }

    /// Checked evaluation of a basic operation.
    pub fn eval_op(&self, op: usize, args: &[usize]) -> Result<usize> {
        let t = self
            .operations
            .get(op)
            .ok_or_else(|| Error::arg(format!("operation index {op} out of range")))?;
        if args.len() != t.arity {
            return Err(Error::arg(format!(
                "operation {:?} has arity {}, got {} arguments",
                t.name,
                t.arity,
                args.len()
            )));
        }
        if let Some(&bad) = args.iter().find(|&&a| a >= self.size) {
            return Err(Error::arg(format!("argument {bad} outside universe of size {}", self.size)));
        }
        Ok(self.apply(op, args))
    }

    /// Evaluates `term` with variable `i` bound to `assignment[i]`.
    pub fn eval_term(&self, term: &Term, assignment: &[usize]) -> Result<usize> {
        match term {
            Term::Var(i) => {
                let v = *assignment
                    .get(*i)
                    .ok_or_else(|| Error::arg(format!("variable x{i} is unbound")))?;
                if v >= self.size {
                    return Err(Error::arg(format!("value {v} outside universe")));
                }
                Ok(v)
            }
            Term::Op(op, children) => {
                let args = children
                    .iter()
                    .map(|c| self.eval_term(c, assignment))
                    .collect::<Result<Vec<_>>>()?;
                self.eval_op(*op, &args)
            }
        }
    }

    /// The table of the `arity`-ary term operation of `term`.
    pub fn term_table(&self, term: &Term, arity: usize) -> Result<Vec<usize>> {
        let len = checked_pow(self.size, arity).ok_or_else(|| Error::arg("term table too large"))?;
        let mut args = vec![0; arity];
        let mut out = Vec::with_capacity(len);
        for _ in 0..len {
            out.push(self.eval_term(term, &args)?);
            increment(&mut args, self.size);
        }
        Ok(out)
    }

    /// Checks `lhs ≈ rhs` under all `n^vars` assignments.
    pub fn check_identity(&self, lhs: &Term, rhs: &Term, vars: usize) -> Result<IdentityCheck> {
        let bound = lhs.max_var().max(rhs.max_var());
        if let Some(m) = bound {
            if m >= vars {
                return Err(Error::arg(format!("term uses x{m} but only {vars} variables declared")));
            }
        }
        let len = checked_pow(self.size, vars).ok_or_else(|| Error::arg("too many assignments"))?;
        let mut args = vec![0; vars];
        for _ in 0..len {
            if self.eval_term(lhs, &args)? != self.eval_term(rhs, &args)? {
                return Ok(IdentityCheck {
                    counterexample: Some(args),
                });
            }
            increment(&mut args, self.size);
        }
        Ok(IdentityCheck { counterexample: None })
    }

    /// True when every basic operation satisfies `f(x, .., x) = x`.
    pub fn is_idempotent(&self) -> bool {
        (0..self.op_count()).all(|op| {
            let k = self.arity(op);
            k > 0 && (0..self.size).all(|x| self.apply(op, &vec![x; k]) == x)
        })
    }

    /// Coordinatewise product; element `(i, j)` is encoded as `i * |b| + j`.
    pub fn direct_product(&self, other: &FiniteAlgebra) -> Result<FiniteAlgebra> {
        if self.signature() != other.signature() {
            return Err(Error::arg(format!(
                "signatures of {:?} and {:?} differ",
                self.name, other.name
            )));
        }
        let nb = other.size;
        let n = self.size * nb;
        let ops = self
            .operations
            .iter()
            .enumerate()
            .map(|(oi, o)| {
                OperationTable::from_fn(o.name.clone(), o.arity, n, |args| {
                    let left: Vec<usize> = args.iter().map(|&x| x / nb).collect();
                    let right: Vec<usize> = args.iter().map(|&x| x % nb).collect();
                    self.apply(oi, &left) * nb + other.apply(oi, &right)
                })
            })
            .collect();
        FiniteAlgebra::new(format!("{}x{}", self.name, other.name), n, ops)
    }

    /// Returns the first `(op, args, position, other)` showing that `theta`
    /// is not compatible, or `None` if it is a congruence.
    pub fn compatibility_violation(&self, theta: &Partition) -> Option<CompatibilityViolation> {
        let n = self.size;
        for op in 0..self.op_count() {
            let k = self.arity(op);
            if k == 0 {
                continue;
            }
            for x in 0..n {
                let r = theta.rep(x);
                if r == x {
                    continue;
                }
                for pos in 0..k {
                    let others = checked_pow(n, k - 1).unwrap_or(0);
                    let mut rest = vec![0; k - 1];
                    for _ in 0..others {
                        let mut a = Vec::with_capacity(k);
                        a.extend_from_slice(&rest[..pos]);
                        a.push(x);
                        a.extend_from_slice(&rest[pos..]);
                        let mut b = a.clone();
                        b[pos] = r;
                        if !theta.related(self.apply(op, &a), self.apply(op, &b)) {
                            return Some(CompatibilityViolation {
                                op: self.operations[op].name.clone(),
                                left: a,
                                right: b,
                            });
                        }
                        increment(&mut rest, n);
                    }
                }
            }
        }
        None
    }

    pub fn is_congruence(&self, theta: &Partition) -> bool {
        theta.size() == self.size && self.compatibility_violation(theta).is_none()
    }

    /// The quotient by a congruence, with the element-to-block map. Blocks are
    /// numbered by increasing least representative.
    pub fn quotient(&self, theta: &Partition) -> Result<(FiniteAlgebra, Vec<usize>)> {
        if theta.size() != self.size {
            return Err(Error::arg("partition size does not match algebra"));
        }
        if let Some(v) = self.compatibility_violation(theta) {
            return Err(Error::pre(format!(
                "not a congruence: {}{:?} and {}{:?} have unrelated values",
                v.op, v.left, v.op, v.right
            )));
        }
        let (map, m) = theta.block_map();
        let mut rep_of_block = vec![0; m];
        for (i, &b) in map.iter().enumerate() {
            if theta.rep(i) == i {
                rep_of_block[b] = i;
            }
        }
        let ops = self
            .operations
            .iter()
            .enumerate()
            .map(|(oi, o)| {
                OperationTable::from_fn(o.name.clone(), o.arity, m, |args| {
                    let lifted: Vec<usize> = args.iter().map(|&b| rep_of_block[b]).collect();
                    map[self.apply(oi, &lifted)]
                })
            })
            .collect();
        let q = FiniteAlgebra::new(format!("{}/~", self.name), m, ops)?;
        Ok((q, map))
    }

    /// Restriction to a subuniverse (given as a sorted list of elements).
    pub fn subalgebra(&self, universe: &[usize]) -> Result<FiniteAlgebra> {
        let mut index = vec![usize::MAX; self.size];
        for (i, &x) in universe.iter().enumerate() {
            index[x] = i;
        }
        let m = universe.len();
        let mut ops = Vec::with_capacity(self.op_count());
        for (oi, o) in self.operations.iter().enumerate() {
            let mut bad = None;
            let t = OperationTable::from_fn(o.name.clone(), o.arity, m, |args| {
                let lifted: Vec<usize> = args.iter().map(|&a| universe[a]).collect();
                let v = index[self.apply(oi, &lifted)];
                if v == usize::MAX {
                    bad = Some(lifted);
                    0
                } else {
                    v
                }
            });
            if let Some(args) = bad {
                return Err(Error::pre(format!("not a subuniverse: {}{:?} leaves it", o.name, args)));
            }
            ops.push(t);
        }
        FiniteAlgebra::new(format!("{}|sub", self.name), m, ops)
    }
}

/// Result of an identity check; `counterexample` is the first failing
/// assignment in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityCheck {
    pub counterexample: Option<Vec<usize>>,
}

impl IdentityCheck {
    pub fn holds(&self) -> bool {
        self.counterexample.is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompatibilityViolation {
    pub op: String,
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

pub(crate) fn checked_pow(base: usize, exp: usize) -> Option<usize> {
    let mut acc: usize = 1;
    for _ in 0..exp {
        acc = acc.checked_mul(base)?;
    }
    Some(acc)
}

/// Advances `digits` to the next tuple in lexicographic order over `0..base`.
#[inline]
pub(crate) fn increment(digits: &mut [usize], base: usize) {
    for d in digits.iter_mut().rev() {
        *d += 1;
        if *d < base {
            return;
        }
        *d = 0;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn product_encoding_is_row_major() {
        let z2 = fixtures::z2_semigroup();
        let zz = z2.direct_product(&z2).unwrap();
        // (1,0)·(1,0) = (0,0), encoded 2·2 = 0
        assert_eq!(zz.eval_op(0, &[2, 2]).unwrap(), 0);
        let a = fixtures::z2s2();
        assert_eq!(a.eval_op(0, &[0, 0]).unwrap(), 0);
        assert_eq!(a.eval_op(0, &[2, 2]).unwrap(), 0);
        assert_eq!(a.eval_op(0, &[2, 1]).unwrap(), 2);
    }

    #[test]
    fn eval_op_errors() {
        let a = fixtures::z2s2();
        assert!(a.eval_op(1, &[0, 0]).is_err());
        assert!(a.eval_op(0, &[0]).is_err());
        assert!(a.eval_op(0, &[0, 4]).is_err());
    }

    #[test]
    fn unary_and_nullary_ops() {
        let id = OperationTable::from_fn("id", 1, 3, |a| a[0]);
        let c = OperationTable::new("c", 0, vec![2]);
        let a = FiniteAlgebra::new("t", 3, vec![id, c]).unwrap();
        for i in 0..3 {
            assert_eq!(a.eval_op(0, &[i]).unwrap(), i);
        }
        assert_eq!(a.eval_op(1, &[]).unwrap(), 2);
    }

    #[test]
    fn validation() {
        assert!(FiniteAlgebra::new("x", 2, vec![OperationTable::new("f", 2, vec![0, 1, 1])]).is_err());
        assert!(FiniteAlgebra::new("x", 2, vec![OperationTable::new("f", 1, vec![0, 2])]).is_err());
        assert!(FiniteAlgebra::new("x", 0, vec![]).is_err());
        assert!(FiniteAlgebra::new("sets", 3, vec![]).is_ok());
    }

    #[test]
    fn product_with_trivial_keeps_tables() {
        let a = fixtures::z2s2();
        let one = fixtures::trivial_semigroup();
        let p = a.direct_product(&one).unwrap();
        assert_eq!(p.operations()[0].table, a.operations()[0].table);
        let sets = fixtures::set(2);
        assert!(a.direct_product(&sets).is_err());
    }

    #[test]
    fn quotients() {
        let a = fixtures::z2s2();
        let delta: Partition = "0,2|1|3".parse().unwrap();
        let (q, map) = a.quotient(&delta).unwrap();
        assert_eq!(q.size(), 3);
        assert_eq!(map, vec![0, 1, 0, 2]);
        let (q0, _) = a.quotient(&Partition::zero(4)).unwrap();
        assert_eq!(q0.operations(), a.operations());
        let (q1, _) = a.quotient(&Partition::one(4)).unwrap();
        assert_eq!(q1.size(), 1);
        let bad: Partition = "0,1|2|3".parse().unwrap();
        assert!(matches!(a.quotient(&bad), Err(Error::Precondition(_))));
    }

    #[test]
    fn product_then_projection_kernel_gives_factor() {
        let z2 = fixtures::z2_semigroup();
        let s2 = fixtures::s2_semigroup();
        let p = z2.direct_product(&s2).unwrap();
        // kernel of the first projection: (i,j) ~ (i,j')
        let ker = Partition::from_labels(&(0..4).map(|x| x / 2).collect::<Vec<_>>());
        let (q, _) = p.quotient(&ker).unwrap();
        assert_eq!(q.operations()[0].table, z2.operations()[0].table);
        let ker2 = Partition::from_labels(&(0..4).map(|x| x % 2).collect::<Vec<_>>());
        let (q2, _) = p.quotient(&ker2).unwrap();
        assert_eq!(q2.operations()[0].table, s2.operations()[0].table);
    }

    #[test]
    fn terms_on_z2s2() {
        let a = fixtures::z2s2();
        let xyz = Term::parse("(mul (mul x y) z)", &a, 3).unwrap();
        let zxy = Term::parse("(mul (mul z x) y)", &a, 3).unwrap();
        for x in 0..4 {
            assert_eq!(a.eval_term(&xyz, &[x, x, x]).unwrap(), x);
        }
        assert!(a.check_identity(&xyz, &zxy, 3).unwrap().holds());
        let x = Term::Var(0);
        assert!(a.check_identity(&x, &x, 1).unwrap().holds());
        assert_eq!(a.eval_term(&x, &[3, 1]).unwrap(), 3);
        let xy = Term::parse("(mul x y)", &a, 2).unwrap();
        let res = a.check_identity(&xy, &x, 2).unwrap();
        let w = res.counterexample.expect("xy = x must fail");
        assert_ne!(a.eval_term(&xy, &w).unwrap(), w[0]);
        assert!(a.eval_term(&xyz, &[0, 1]).is_err());
        assert!(a.check_identity(&xyz, &x, 2).is_err());
    }

    #[test]
    fn single_node_term_matches_eval_op() {
        let a = fixtures::z2s2();
        let t = Term::Op(0, vec![Term::Var(0), Term::Var(1)]);
        for x in 0..4 {
            for y in 0..4 {
                assert_eq!(a.eval_term(&t, &[x, y]).unwrap(), a.eval_op(0, &[x, y]).unwrap());
            }
        }
    }
}
