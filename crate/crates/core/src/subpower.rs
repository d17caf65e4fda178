//! Generated subuniverses of finite powers `A^d`.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::algebra::{increment, FiniteAlgebra};
use crate::error::{Error, Result};

/// Default element cap for subpower closures.
pub const DEFAULT_CLOSURE_BUDGET: usize = 1 << 20;

/// A set of length-`power` vectors over the universe of an algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TupleSet {
    pub power: usize,
    pub elements: Vec<Vec<usize>>,
}

impl TupleSet {
    pub fn new(power: usize, mut elements: Vec<Vec<usize>>) -> Result<Self> {
        if let Some(bad) = elements.iter().find(|v| v.len() != power) {
            return Err(Error::arg(format!(
                "tuple of length {} in a set of power {power}",
                bad.len()
            )));
        }
        elements.sort();
        elements.dedup();
        Ok(TupleSet { power, elements })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, v: &[usize]) -> bool {
        self.elements.iter().any(|e| e == v)
    }

    /// The elements as a sorted vector (closure output keeps BFS order).
    pub fn sorted(&self) -> Vec<Vec<usize>> {
        let mut e = self.elements.clone();
        e.sort();
        e
    }
}

/// How an element of a closure was first produced.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Origin {
    /// The i-th generator (after sorting and deduplication).
    Generator(usize),
    /// A basic operation applied to earlier elements.
    Apply(usize, Vec<usize>),
}

/// A generated subpower with provenance for every element.
#[derive(Clone, Debug)]
pub struct Closure {
    pub power: usize,
    pub elements: Vec<Vec<usize>>,
    pub origins: Vec<Origin>,
    index: HashMap<Vec<usize>, usize>,
}

impl Closure {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, v: &[usize]) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn into_tuple_set(self) -> TupleSet {
        TupleSet {
            power: self.power,
            elements: self.elements,
        }
    }
}

/// Least subset of `A^power` containing `generators` and closed under the
/// coordinatewise operations of `alg`.
///
/// Element order is deterministic: the sorted, deduplicated generators, then
/// the values of nullary operations, then rounds. In each round every
/// operation (by index) is applied to every argument tuple (lexicographic in
/// element indices) that uses at least one element produced in the previous
/// round; new values are appended in that order.
pub fn subpower_closure(
    alg: &FiniteAlgebra,
    power: usize,
    generators: &TupleSet,
    budget: usize,
) -> Result<TupleSet> {
    if generators.power != power {
        return Err(Error::arg("generator power does not match"));
    }
    Ok(closure_with_origins(alg, power, generators.sorted(), budget)?.into_tuple_set())
}

pub(crate) fn closure_with_origins(
    alg: &FiniteAlgebra,
    power: usize,
    generators: Vec<Vec<usize>>,
    budget: usize,
) -> Result<Closure> {
    let (c, status, _) = closure_partial(alg, power, generators, budget)?;
    status.map(|_| c)
}

/// Like `closure_with_origins`, but on budget exhaustion returns the elements
/// found so far with the error, plus the number of completed rounds.
pub(crate) fn closure_partial(
    alg: &FiniteAlgebra,
    power: usize,
    mut generators: Vec<Vec<usize>>,
    budget: usize,
) -> Result<(Closure, Result<()>, usize)> {
    generators.sort();
    generators.dedup();
    let n = alg.size();
    if generators.iter().any(|g| g.len() != power || g.iter().any(|&x| x >= n)) {
        return Err(Error::arg("generator outside A^power"));
    }
    let mut c = Closure {
        power,
        elements: Vec::new(),
        origins: Vec::new(),
        index: HashMap::new(),
    };
    let mut rounds = 0;
    let status = grow(alg, &mut c, generators, budget, &mut rounds);
    Ok((c, status, rounds))
}

fn grow(
    alg: &FiniteAlgebra,
    c: &mut Closure,
    generators: Vec<Vec<usize>>,
    budget: usize,
    rounds: &mut usize,
) -> Result<()> {
    let power = c.power;
    let push = |c: &mut Closure, v: Vec<usize>, origin: Origin| -> Result<()> {
        if c.index.contains_key(&v) {
            return Ok(());
        }
        if c.elements.len() >= budget {
            return Err(Error::Budget {
                what: "subpower closure",
                budget,
                partial: c.elements.len(),
            });
        }
        c.index.insert(v.clone(), c.elements.len());
        c.elements.push(v);
        c.origins.push(origin);
        Ok(())
    };
    for (i, g) in generators.into_iter().enumerate() {
        push(c, g, Origin::Generator(i))?;
    }
    for op in 0..alg.op_count() {
        if alg.arity(op) == 0 {
            push(c, vec![alg.apply(op, &[]); power], Origin::Apply(op, vec![]))?;
        }
    }

    let mut done = 0;
    let mut scratch = Vec::new();
    loop {
        let end = c.elements.len();
        if done == end {
            return Ok(());
        }
        for op in 0..alg.op_count() {
            let k = alg.arity(op);
            if k == 0 {
                continue;
            }
            let mut idx = vec![0usize; k];
            let total = end.checked_pow(k as u32).ok_or(Error::Budget {
                what: "subpower closure",
                budget,
                partial: end,
            })?;
            for _ in 0..total {
                if idx.iter().any(|&i| i >= done) {
                    let mut v = Vec::with_capacity(power);
                    for coord in 0..power {
                        scratch.clear();
                        scratch.extend(idx.iter().map(|&i| c.elements[i][coord]));
                        v.push(alg.apply(op, &scratch));
                    }
                    push(c, v, Origin::Apply(op, idx.clone()))?;
                }
                increment(&mut idx, end);
            }
        }
        done = end;
        *rounds += 1;
    }
}
