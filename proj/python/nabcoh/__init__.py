"""Non-abelian cohomology of finite groups.

Groups, subgroups, actions and extensions are objects; checks return dicts
with ``holds``, ``values`` and ``violations``.
"""

from ._core import (
    Action,
    BoundExceeded,
    Extension,
    Group,
    Subgroup,
    __version__,
    abelian_cohomology,
    abelian_shapiro,
    all_actions,
    anabelian,
    direct_product,
    extensions,
    h1,
    h1_sections,
    holt,
    prop_ext,
    run_scenario,
    sections,
    semidirect,
    shapiro1,
    suite_names,
    transport,
    verify,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
