use std::fmt::Write as _;

use crate::algebra::frobenius::gram_matrix;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::pencil::LinearPencil;

use super::criteria::{self, unit_pencil};
use super::{ExtensionProblem, Method, SymmetryCertificate, Verdict};

/// A decision procedure for symmetry of `T(A, alpha)`.
pub trait Criterion<F: Field>: Send + Sync {
    fn method(&self) -> Method;

    fn description(&self) -> &'static str;

    /// Whether a negative outcome means not-symmetric (rather than inconclusive).
    fn is_complete(&self) -> bool {
        self.method().is_complete()
    }

    fn evaluate(&self, problem: &ExtensionProblem<F>) -> Result<SymmetryCertificate<F>>;
}

type Runner<F> = fn(&ExtensionProblem<F>) -> Result<SymmetryCertificate<F>>;

struct Builtin<F: Field> {
    method: Method,
    description: &'static str,
    run: Runner<F>,
}

impl<F: Field> Criterion<F> for Builtin<F> {
    fn method(&self) -> Method {
        self.method
    }

    fn description(&self) -> &'static str {
        self.description
    }

    fn evaluate(&self, problem: &ExtensionProblem<F>) -> Result<SymmetryCertificate<F>> {
        (self.run)(problem)
    }
}

/// Criteria keyed by [`Method`]; later registrations replace earlier ones.
pub struct CriterionRegistry<F: Field> {
    entries: Vec<Box<dyn Criterion<F>>>,
}

impl<F: Field> Default for CriterionRegistry<F> {
    fn default() -> Self {
        let mut r = Self { entries: Vec::new() };
        let builtins: [(Method, &'static str, Runner<F>); 5] = [
            (
                Method::Cond1,
                "symmetrizing form on T(A, alpha) by trace-form search",
                criteria::oracle_condition1,
            ),
            (
                Method::Cond2,
                "central unit c and form h with alpha(a,b)(c) - alpha(b,a)(c) + h(ab - ba) = 0",
                criteria::witness_condition2,
            ),
            (
                Method::Cond3,
                "central unit c such that i_c^*(alpha~) lifts to a cyclic 2-cocycle",
                criteria::witness_condition3,
            ),
            (Method::Itagaki, "condition 2 with h = 0 (sufficient only)", criteria::check_itagaki),
            (Method::Oty, "condition 2 with h = 0 and c = 1 (sufficient only)", criteria::check_oty),
        ];
        for (method, description, run) in builtins {
            r.register(Box::new(Builtin {
                method,
                description,
                run,
            }));
        }
        r
    }
}

impl<F: Field> CriterionRegistry<F> {
    pub fn register(&mut self, criterion: Box<dyn Criterion<F>>) {
        self.entries.retain(|c| c.method() != criterion.method());
        self.entries.push(criterion);
        self.entries.sort_by_key(|c| c.method());
    }

    pub fn get(&self, method: Method) -> Result<&dyn Criterion<F>> {
        self.entries
            .iter()
            .find(|c| c.method() == method)
            .map(|c| c.as_ref())
            .ok_or_else(|| Error::UnknownCriterion(method.name().into()))
    }

    pub fn methods(&self) -> Vec<Method> {
        self.entries.iter().map(|c| c.method()).collect()
    }

    /// Runs the requested criteria concurrently and checks that their
    /// verdicts are consistent.
    pub fn decide(&self, problem: &ExtensionProblem<F>, methods: &[Method]) -> Result<Decision<F>> {
        let mut methods = methods.to_vec();
        methods.sort();
        methods.dedup();
        let criteria = methods.iter().map(|&m| self.get(m)).collect::<Result<Vec<_>>>()?;
        let results: Vec<Result<SymmetryCertificate<F>>> = std::thread::scope(|s| {
            let handles: Vec<_> = criteria
                .iter()
                .map(|c| s.spawn(move || c.evaluate(problem)))
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("criterion panicked"))
                .collect()
        });
        let certificates = results.into_iter().collect::<Result<Vec<_>>>()?;
        let decision = Decision { certificates };
        decision.check_consistency(problem)?;
        Ok(decision)
    }
}

/// Certificates from several criteria on one problem, in [`Method`] order.
#[derive(Clone, Debug, PartialEq)]
pub struct Decision<F: Field> {
    pub certificates: Vec<SymmetryCertificate<F>>,
}

impl<F: Field> Decision<F> {
    pub fn get(&self, method: Method) -> Option<&SymmetryCertificate<F>> {
        self.certificates.iter().find(|c| c.method == method)
    }

    /// Common verdict of the complete criteria that ran.
    pub fn consensus(&self) -> Option<Verdict> {
        self.certificates
            .iter()
            .find(|c| c.method.is_complete())
            .map(|c| c.verdict)
    }

    /// Any verdict other than symmetric.
    pub fn has_negative(&self) -> bool {
        self.certificates.iter().any(|c| c.verdict != Verdict::Symmetric)
    }

    fn check_consistency(&self, problem: &ExtensionProblem<F>) -> Result<()> {
        let complete: Vec<_> = self.certificates.iter().filter(|c| c.method.is_complete()).collect();
        let mut problems = Vec::new();
        if let Some(first) = complete.first() {
            for c in &complete[1..] {
                if c.verdict != first.verdict {
                    problems.push(format!("{} says {}, {} says {}", first.method, first.verdict, c.method, c.verdict));
                }
            }
        }
        let sufficient_yes = self
            .certificates
            .iter()
            .filter(|c| !c.method.is_complete() && c.verdict == Verdict::Symmetric);
        for s in sufficient_yes {
            for c in complete.iter().filter(|c| c.verdict == Verdict::NotSymmetric) {
                problems.push(format!("{} found a witness but {} says not-symmetric", s.method, c.method));
            }
        }
        if let (Some(oty), Some(ita)) = (self.get(Method::Oty), self.get(Method::Itagaki)) {
            if oty.verdict == Verdict::Symmetric && ita.verdict != Verdict::Symmetric {
                problems.push("oty found a witness but itagaki did not".into());
            }
        }
        if problems.is_empty() {
            return Ok(());
        }
        let f = problem.field();
        let mut dump = problems.join("\n");
        for c in &self.certificates {
            let _ = write!(dump, "\n[{}] verdict {}", c.method, c.verdict);
            if let Some(w) = &c.witness {
                let fmt = |v: &[F::Elem]| v.iter().map(|x| f.format(x)).collect::<Vec<_>>().join(", ");
                let _ = write!(dump, "; c = ({}); h = ({})", fmt(&w.c), fmt(&w.h));
            }
            if let Some(g) = &c.grid {
                let _ = write!(
                    dump,
                    "; solution space dim {}; {} grid points of degree {}",
                    c.solution_space.len(),
                    g.points,
                    g.degree
                );
            }
        }
        Err(Error::Disagreement(dump))
    }
}

/// [`CriterionRegistry::decide`] with the built-in criteria.
pub fn decide<F: Field>(problem: &ExtensionProblem<F>, methods: &[Method]) -> Result<Decision<F>> {
    CriterionRegistry::default().decide(problem, methods)
}

impl<F: Field> SymmetryCertificate<F> {
    /// Re-verifies the certificate against `problem`: witnesses are checked
    /// directly, determinant evidence is re-evaluated on the stored basis.
    pub fn recheck(&self, problem: &ExtensionProblem<F>) -> Result<bool> {
        if let Some(w) = &self.witness {
            return Ok(problem.verify_witness(w).is_ok());
        }
        if let Some((a, b)) = self.failing_pair {
            let f = problem.field();
            let k = problem.pairs().iter().position(|&p| p == (a, b));
            let values = problem.omega_matrix().mul_vec(problem.algebra().unit())?;
            return Ok(k.is_some_and(|k| !f.is_zero(&values[k])));
        }
        let Some(grid) = &self.grid else {
            return Ok(false);
        };
        let pencil = match self.method {
            Method::Cond1 => {
                let t = problem.extension()?;
                let members = self.solution_space.iter().map(|l| gram_matrix(&t, l)).collect();
                LinearPencil::new(t.field(), t.dim(), members)
            }
            _ => unit_pencil(problem, &self.solution_space),
        };
        Ok(pencil.recheck(grid))
    }
}
