"""Row-reduction backend selection.

The compiled extension ``gkmcalc._elim_cy`` (built from ``_elim_cy.pyx``,
see the repository ``setup.py``) implements the same integer reduction as
``gkmcalc._elim_py``.  The compiled core is picked up automatically when
present; both produce bit-identical output.

The environment variable ``GKM_ELIM_BACKEND`` forces a choice:

* ``auto`` (default) - compiled if importable, else pure Python
* ``python``         - always the pure-Python core
* ``compiled``       - require the extension, raise if missing
"""

import os

_choice = os.environ.get("GKM_ELIM_BACKEND", "auto")
if _choice not in ("auto", "python", "compiled"):
    raise ImportError(
        f"GKM_ELIM_BACKEND must be 'auto', 'python' or 'compiled', got {_choice!r}"
    )

reduce_int_rows = None
ACTIVE_BACKEND = None

if _choice in ("auto", "compiled"):
    try:
        from ._elim_cy import reduce_int_rows as _compiled_reduce

        reduce_int_rows = _compiled_reduce
        ACTIVE_BACKEND = "compiled"
    except ImportError:
        if _choice == "compiled":
            raise ImportError(
                "GKM_ELIM_BACKEND=compiled but the gkmcalc._elim_cy extension "
                "is not built; run `python setup.py build_ext --inplace`"
            ) from None

if reduce_int_rows is None:
    from ._elim_py import reduce_int_rows as _python_reduce

    reduce_int_rows = _python_reduce
    ACTIVE_BACKEND = "python"
