"""Table and Casimir verification reports."""

from hni.verify import casimir_report, table_report


def test_tables_match_build_exactly():
    checks = table_report()
    assert len(checks) == 6
    assert all(c["status"] == "pass" for c in checks), \
        [c for c in checks if c["status"] != "pass"]


def test_casimir_report_statuses():
    checks = casimir_report(n_max=2)
    by_name = {c["name"]: c for c in checks}
    assert by_name["Casimir is central in H_1^i"]["status"] == "pass"
    assert by_name["Casimir is central in H_2^i"]["status"] == "pass"
    assert by_name["printed Casimir action table on the odd block matches"][
        "status"] == "paper-mismatch"
    assert "C(F3)" in by_name["printed Casimir action table on the odd block matches"][
        "detail"]
    assert by_name["stated -1/2 eigenvectors E1, F3, P1 are eigenvectors"][
        "status"] == "pass"
    assert by_name["stated +1/2 eigenvectors E3, F1, P3 are eigenvectors"][
        "status"] == "pass"
    assert by_name["only eigenvalues are +1/2 and -1/2 on the odd block"][
        "status"] == "pass"
    assert by_name["stated eigenspaces are the full eigenspaces"][
        "status"] == "paper-mismatch"
    assert by_name[
        "e1 and e3 are not eigenvectors (Casimir mixes them with P1, P3)"][
        "status"] == "pass"
    assert not [c for c in checks if c["status"] == "fail"]
