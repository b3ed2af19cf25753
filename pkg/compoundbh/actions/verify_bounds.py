"""
    compoundbh/actions/verify_bounds
    ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~

    Contains functionality for the `verify-bounds` action.
"""
from .. import bounds, reports, results, serde
from ..hints import Float, Int, OptionalStr


@results.wrapper
def verify_bounds(tol: Float, length: Int, out: OptionalStr = None) -> results.Result:
    """
    Responsible for running every numerical bound check.

    :param tol: Convergence tolerance of the c sequence
    :param length: Length of the c sequence
    :param out: Optional JSON file to write the report to
    :return: Result failing when any check fails
    """
    checks = bounds.verify(length, tol)
    document = [{'name': c.name, 'computed': c.computed, 'reference': c.reference, 'pass': c.passed}
                for c in checks]
    if out:
        reports.write_json(document, out)
    failed = [c.name for c in checks if not c.passed]
    stderr = f'{len(failed)} of {len(checks)} checks failed: {", ".join(failed)}' if failed else ''
    return results.verdict(not failed, stdout=serde.dumps(document), stderr=stderr)
