"""Command-line surface: build, verify, diff-against-source, conjecture probe.

Exit codes: 0 when every check passes (paper-mismatch entries count as pass
unless --strict-paper is given), 1 on internal inconsistency, 2 on usage
errors.  Output is deterministic for a fixed seed.
"""

import json
import sys

import click

from hni.quotient import build_hni, named_basis, fourier_basis


def _emit(command, n, checks, report, out, strict_paper=False, extra=None):
    """Print a verification report and return the exit code."""
    statuses = [c["status"] for c in checks]
    summary = {
        "pass": statuses.count("pass"),
        "fail": statuses.count("fail"),
        "paper-mismatch": statuses.count("paper-mismatch"),
    }
    payload = {"command": command, "n": n, "checks": checks, "summary": summary}
    if extra:
        payload.update(extra)
    if report == "json":
        text = json.dumps(payload, indent=2, sort_keys=True, default=str)
    else:
        lines = [f"[{c['status']}] {c['name']}"
                 + (f"  ({c.get('detail') or c.get('witness')})"
                    if c.get("detail") or c.get("witness") else "")
                 for c in checks]
        lines.append(f"summary: {summary['pass']} pass, {summary['fail']} fail, "
                     f"{summary['paper-mismatch']} paper-mismatch")
        text = "\n".join(lines)
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        click.echo(text)
    if summary["fail"]:
        return 1
    if strict_paper and summary["paper-mismatch"]:
        return 1
    return 0


_REPORT = click.option("--report", type=click.Choice(["json", "text"]), default="text",
                       show_default=True, help="Output format.")
_OUT = click.option("--out", type=click.Path(dir_okay=False), default=None,
                    help="Write the report to a file instead of stdout.")
_STRICT = click.option("--strict-paper", is_flag=True,
                       help="Treat paper-mismatch entries as failures.")
_SEED = click.option("--seed", type=int, default=0, show_default=True)


@click.group()
def main():
    """Exact-arithmetic engine for the quantum groups H_N^i at q = i."""


@main.command()
@click.option("--n", type=int, default=1, show_default=True)
@click.option("--basis", type=click.Choice(["pbw", "fourier", "named"]), default="pbw",
              show_default=True)
@_REPORT
@_OUT
def build(n, basis, report, out):
    """Build H_N^i and verify unit and associativity of the structure constants."""
    if n < 1:
        raise click.UsageError("--n must be a positive integer")
    if basis == "named" and n not in (1, 2):
        raise click.UsageError("the named basis exists only for N in {1, 2}")
    algebra = build_hni(n)
    if basis == "named":
        algebra = named_basis(n).transport()
    elif basis == "fourier":
        algebra = fourier_basis(n).transport()
    checks = [
        {"name": "unit axiom on all basis elements",
         "status": "pass" if algebra.check_unit() else "fail", "detail": ""},
        {"name": "associativity on all basis triples",
         "status": "pass" if algebra.check_associativity() else "fail", "detail": ""},
    ]
    extra = {"dimension": algebra.dim, "scalar_field_order": algebra.order,
             "basis": basis, "labels": algebra.basis_labels}
    if report == "json" and out:
        extra["structure_constants"] = algebra.to_json()
    sys.exit(_emit("build", n, checks, report, out, extra=extra))


@main.command()
@click.option("--n", type=int, default=None, help="Restrict to one N (1 or 2).")
@_REPORT
@_OUT
@_STRICT
def table(n, report, out, strict_paper):
    """Diff the transcribed multiplication tables against the build."""
    from hni.verify import table_report

    checks = table_report()
    if n == 1:
        checks = [c for c in checks if "H_1^i" in c["name"]]
    elif n == 2:
        checks = [c for c in checks if "H_2^i" in c["name"]]
    elif n is not None:
        raise click.UsageError("tables exist only for N in {1, 2}")
    sys.exit(_emit("table", n, checks, report, out, strict_paper))


@main.command("hopf-check")
@click.option("--n", type=int, default=1, show_default=True)
@_REPORT
@_OUT
@_STRICT
def hopf_check(n, report, out, strict_paper):
    """Verify the Hopf axioms exactly; for N in {1, 2} also diff the printed formulas."""
    from hni.hopf import build_hopf, compare_hopf_formulas, verify_hopf_axioms, \
        verify_hopf_ideal

    if n < 1:
        raise click.UsageError("--n must be a positive integer")
    checks = list(verify_hopf_axioms(build_hopf(n)))
    checks += verify_hopf_ideal(n)
    if n in (1, 2):
        checks += compare_hopf_formulas(n)
    sys.exit(_emit("hopf-check", n, checks, report, out, strict_paper))


@main.command()
@click.option("--n", type=int, default=1, show_default=True)
@click.option("--basis", type=click.Choice(["pbw", "named"]), default="pbw",
              show_default=True)
@click.option("--rep", type=click.Choice(["lambda", "mu"]), default="lambda",
              show_default=True, help="Trace form: regular or adjoint representation.")
@_REPORT
@_OUT
def gram(n, basis, rep, report, out):
    """Signature and kernel of a representation trace form."""
    from hni.representations import gram_lambda, gram_mu

    if n < 1:
        raise click.UsageError("--n must be a positive integer")
    if basis == "named" and n not in (1, 2):
        raise click.UsageError("the named basis exists only for N in {1, 2}")
    form = gram_lambda(n, basis=basis) if rep == "lambda" else gram_mu(n, basis=basis)
    sig = form.signature()
    checks = [{"name": f"{rep}-form Gram matrix is Hermitian with exact signature",
               "status": "pass", "detail": ""}]
    extra = {
        "representation": rep,
        "basis": basis,
        "signature": {"positive": sig.n_plus, "negative": sig.n_minus, "zero": sig.n_zero},
        "kernel_dimension": len(form.kernel()),
    }
    sys.exit(_emit("gram", n, checks, report, out, extra=extra))


@main.command()
@click.option("--n", type=int, default=1, show_default=True)
@_REPORT
@_OUT
@_STRICT
def adjoint(n, report, out, strict_paper):
    """Adjoint representation: multiplicativity, and table diffs for N in {1, 2}."""
    from hni.representations import adjoint_is_multiplicative, compare_adjoint_h1, \
        compare_adjoint_h2

    if n < 1:
        raise click.UsageError("--n must be a positive integer")
    checks = []
    if n <= 2:
        ok = adjoint_is_multiplicative(n)
        checks.append({"name": "adjoint action is an algebra representation",
                       "status": "pass" if ok else "fail", "detail": ""})
    if n == 1:
        checks += compare_adjoint_h1()
    elif n == 2:
        checks += compare_adjoint_h2()
    sys.exit(_emit("adjoint", n, checks, report, out, strict_paper))


@main.command()
@click.option("--n", type=int, default=1, show_default=True)
@_REPORT
@_OUT
@_STRICT
def radical(n, report, out, strict_paper):
    """Nilradical, semisimple quotient, and model probes."""
    from hni.radical import h1_grassmann_report, h1_radical_report, \
        h2_matrix_model_report, h2_radical_report, radical_report

    if n < 1:
        raise click.UsageError("--n must be a positive integer")
    rep = radical_report(n)
    checks = [{
        "name": f"radical of H_{n}^i: dimension {rep.dim_radical}, "
                f"trace-form kernels {rep.trace_kernel_dims}",
        "status": "pass" if all(rep.containment_flags.values()) else "fail",
        "detail": f"radical contained in form kernels: {rep.containment_flags}",
    }]
    if n == 1:
        checks += h1_radical_report() + h1_grassmann_report()
    elif n == 2:
        checks += h2_radical_report() + h2_matrix_model_report()
    extra = {"radical": json.loads(json.dumps(rep.to_json(), default=str))}
    sys.exit(_emit("radical", n, checks, report, out, strict_paper, extra=extra))


@main.command()
@click.option("--n-max", type=int, default=4, show_default=True)
@_OUT
def conjecture(n_max, out):
    """Probe the semisimplicity/positivity conjecture: radical vs trace-form kernels."""
    from hni.radical import conjecture_probe_json

    if n_max < 1:
        raise click.UsageError("--n-max must be a positive integer")
    text = conjecture_probe_json(n_max)
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        click.echo(text)
    probe = json.loads(text)
    ok = all(all(r["containment_flags"].values()) for r in probe["reports"])
    sys.exit(0 if ok else 1)


@main.command()
@click.option("--check", "which",
              type=click.Choice(["all", "flip", "idempotents", "aut", "inner", "stars"]),
              default="all", show_default=True)
@click.option("--samples", type=int, default=100, show_default=True)
@_SEED
@_REPORT
@_OUT
@_STRICT
def morphisms(which, samples, seed, report, out, strict_paper):
    """Property suites for automorphism, idempotent, and star families of H_1^i."""
    from hni import morphisms as M

    if samples < 1:
        raise click.UsageError("--samples must be a positive integer")
    star_samples = max(1, samples // 5)
    if which == "all":
        checks = M.morphisms_report(samples=samples, star_samples=star_samples, seed=seed)
    elif which == "flip":
        checks = M.flip_report()
    elif which == "idempotents":
        checks = M.idempotent_report(samples=samples, seed=seed)
    elif which == "aut":
        checks = M.automorphism_report(samples=samples, seed=seed)
    elif which == "inner":
        checks = M.inner_report(samples=samples, seed=seed)
    else:
        checks = M.s_commuting_report(samples=samples, seed=seed) \
            + M.star_report(samples=samples, seed=seed)
    sys.exit(_emit("morphisms", 1, checks, report, out, strict_paper))


@main.command("verify-paper")
@click.option("--n-max", type=int, default=4, show_default=True)
@click.option("--samples", type=int, default=100, show_default=True)
@_SEED
@_REPORT
@_OUT
@_STRICT
def verify_paper(n_max, samples, seed, report, out, strict_paper):
    """Run the entire embedded fixture suite and print the discrepancy ledger."""
    from hni.verify import verify_paper_report

    if n_max < 1 or samples < 1:
        raise click.UsageError("--n-max and --samples must be positive integers")
    checks = verify_paper_report(samples=samples, star_samples=max(1, samples // 2),
                                 seed=seed, n_max=n_max)
    sys.exit(_emit("verify-paper", n_max, checks, report, out, strict_paper))


if __name__ == "__main__":
    main()
