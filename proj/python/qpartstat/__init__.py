from ._qps import (  # noqa: F401
    QSyntaxError,
    UnknownIdentity,
    asym_table,
    distinct_partitions,
    divisor_count,
    expand,
    expand_coeffs,
    ffw,
    print_expr,
    registry_ids,
    stat_poly,
    verify,
    verify_suite,
)
