use super::{tensor_square_copairing, tensor_square_gram, Backend, FrobeniusObject};
use crate::exact::{ExactMatrix, Whisker};
use crate::modcat::{is_intertwiner, Module};
use crate::report::{Check, Report};

/// Every Frobenius axiom and derived identity, each as an exact residual.
pub fn check_axioms(f: &FrobeniusObject) -> Report {
    let n = f.dim;
    let nn = n * n;
    let id = ExactMatrix::identity(n);
    let (m, d, e, eps) = (&f.m, &f.delta, &f.e, &f.eps);
    let ev = f.ev();
    let coev = f.coev();
    let mut r = Report::new();

    r.push(Check::equal(
        "associativity",
        &ExactMatrix::chain(n * nn, &[Whisker::new(1, m, n), Whisker::new(1, m, 1)]),
        &ExactMatrix::chain(n * nn, &[Whisker::new(n, m, 1), Whisker::new(1, m, 1)]),
    ));
    r.push(Check::equal("left unit", &id.through(&[Whisker::new(1, e, n), Whisker::new(1, m, 1)]), &id));
    r.push(Check::equal("right unit", &id.through(&[Whisker::new(n, e, 1), Whisker::new(1, m, 1)]), &id));
    r.push(Check::equal(
        "coassociativity",
        &d.through(&[Whisker::new(1, d, n)]),
        &d.through(&[Whisker::new(n, d, 1)]),
    ));
    r.push(Check::equal("left counit", &d.through(&[Whisker::new(1, eps, n)]), &id));
    r.push(Check::equal("right counit", &d.through(&[Whisker::new(n, eps, 1)]), &id));

    // (id⊗m)(δ⊗id), δ∘m, (m⊗id)(id⊗δ)
    let left = ExactMatrix::chain(nn, &[Whisker::new(1, d, n), Whisker::new(n, m, 1)]);
    let middle = d.mul(m);
    let right = ExactMatrix::chain(nn, &[Whisker::new(n, d, 1), Whisker::new(1, m, n)]);
    r.push(Check::equal("Frobenius (left)", &left, &middle));
    r.push(Check::equal("Frobenius (right)", &right, &middle));
    r.push(Check::equal("weak Frobenius", &left, &right));

    r.push(Check::equal("zigzag (ev⊗id)(id⊗coev)", &id.through(&[Whisker::new(n, &coev, 1), Whisker::new(1, &ev, n)]), &id));
    r.push(Check::equal("zigzag (id⊗ev)(coev⊗id)", &id.through(&[Whisker::new(1, &coev, n), Whisker::new(n, &ev, 1)]), &id));

    // One-sided expansions of δ and m through the duality.
    r.push(Check::equal(
        "δ = (m⊗id)(id⊗coev)",
        &id.through(&[Whisker::new(n, &coev, 1), Whisker::new(1, m, n)]),
        d,
    ));
    r.push(Check::equal(
        "δ = (id⊗m)(coev⊗id)",
        &id.through(&[Whisker::new(1, &coev, n), Whisker::new(n, m, 1)]),
        d,
    ));
    r.push(Check::equal(
        "m = (ev⊗id)(id⊗δ)",
        &ExactMatrix::chain(nn, &[Whisker::new(n, d, 1), Whisker::new(1, &ev, n)]),
        m,
    ));
    r.push(Check::equal(
        "m = (id⊗ev)(δ⊗id)",
        &ExactMatrix::chain(nn, &[Whisker::new(1, d, n), Whisker::new(n, &ev, 1)]),
        m,
    ));

    // Extra moves: (m⊗m)(id⊗coev⊗id) and (id⊗ev⊗id)(δ⊗δ) both equal (id⊗m)(δ⊗id).
    let mm = ExactMatrix::chain(
        nn,
        &[Whisker::new(n, &coev, n), Whisker::new(nn, m, 1), Whisker::new(1, m, n)],
    );
    let dd = ExactMatrix::chain(
        nn,
        &[Whisker::new(n, d, 1), Whisker::new(1, d, nn), Whisker::new(n, &ev, n)],
    );
    r.push(Check::equal("(m⊗m)(id⊗coev⊗id) = δ∘m", &mm, &middle));
    r.push(Check::equal("(id⊗ev⊗id)(δ⊗δ) = δ∘m", &dd, &middle));

    // Duals through the self-duality.
    let g = f.gram();
    let c = f.copairing();
    let g2 = tensor_square_gram(&g);
    let c2 = tensor_square_copairing(&c);
    let one = ExactMatrix::identity(1);
    r.push(Check::equal("m* = δ", &super::dual_between(&c2, m, &g), d));
    r.push(Check::equal("δ* = m", &super::dual_between(&c, d, &g2), m));
    r.push(Check::equal("e* = ε", &super::dual_between(&one, e, &g), eps));
    r.push(Check::equal("ε* = e", &super::dual_between(&c, eps, &one), e));
    r.push(Check::equal("ev* = coev", &super::dual_between(&c2, &ev, &one), &coev));
    r.push(Check::equal("coev* = ev", &super::dual_between(&one, &coev, &g2), &ev));

    if let Backend::Rep(x) = &f.backend {
        r.extend(intertwiner_checks(f, x));
    }
    r
}

fn intertwiner_checks(f: &FrobeniusObject, x: &Module) -> Report {
    let mut r = Report::new();
    let (xx, one) = match (x.tensor(x), x.hopf.as_ref()) {
        (Ok(xx), Some(h)) => (xx, Module::trivial(h)),
        _ => {
            r.push(Check::fail("carrier is a Hopf module", None));
            return r;
        }
    };
    r.push(Check::from_bool("m is a morphism", is_intertwiner(&xx, x, &f.m)));
    r.push(Check::from_bool("δ is a morphism", is_intertwiner(x, &xx, &f.delta)));
    r.push(Check::from_bool("e is a morphism", is_intertwiner(&one, x, &f.e)));
    r.push(Check::from_bool("ε is a morphism", is_intertwiner(x, &one, &f.eps)));
    r
}
