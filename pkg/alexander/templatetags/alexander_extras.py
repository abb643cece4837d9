# alexander/templatetags/alexander_extras.py
from django import template

from ..abgrp import format_group
from ..laurent import format_poly

register = template.Library()


@register.filter
def get_item(results, name):
    """Look up one named check; missing names read as skipped"""
    if not results:
        return None
    return results.get(name)


@register.filter
def poly(value):
    """Pretty-print a Laurent polynomial, or '-' when absent"""
    if value is None:
        return "-"
    return format_poly(value)


@register.filter
def check(value):
    if value is None:
        return "skipped"
    return "true" if value else "false"


@register.filter
def matrix_rows(matrix):
    """One bracketed row per line, for an IntMatrix"""
    if matrix.rows == 0:
        return "[]"
    return "\n".join(
        "[" + " ".join(str(x) for x in matrix.row(i)) + "]"
        for i in range(matrix.rows)
    )


@register.filter
def join_ints(values, delimiter=" "):
    return delimiter.join(str(x) for x in values)


@register.filter
def group_form(form):
    """Canonical (rank, torsion) pair as 'Z + Z/2' style text"""
    return format_group(*form)
