# forms.py
"""
Validation of input documents.

An input is a JSON object with exactly one of two keys::

    {"presentation": {"relators": r, "generators": s, "matrix": [[poly, ...], ...]}}
    {"seifert": [[int, ...], ...]}

where a poly is a list of ``[exponent, coefficient]`` pairs with strictly
increasing exponents and nonzero coefficients. Errors name the offending
field path, e.g. ``presentation.matrix[1][0]``.
"""

from django import forms
from django.core.exceptions import ValidationError

from .knots import SeifertMatrix
from .laurent import LaurentPoly
from .present import LambdaPresentation

INPUT_KINDS = ("presentation", "seifert")


def _is_int(x):
    return isinstance(x, int) and not isinstance(x, bool)


def parse_poly(value, path):
    if not isinstance(value, list):
        raise ValidationError(f"{path}: expected a list of [exponent, coefficient] pairs")
    terms = {}
    last = None
    for k, pair in enumerate(value):
        where = f"{path}[{k}]"
        if not (isinstance(pair, list) and len(pair) == 2
                and _is_int(pair[0]) and _is_int(pair[1])):
            raise ValidationError(f"{where}: expected an [exponent, coefficient] pair of integers")
        e, c = pair
        if c == 0:
            raise ValidationError(f"{where}: coefficients must be nonzero")
        if last is not None and e <= last:
            raise ValidationError(f"{where}: exponents must be strictly increasing")
        terms[e] = c
        last = e
    return LaurentPoly(terms)


def parse_presentation(value):
    if not isinstance(value, dict):
        raise ValidationError("presentation: expected an object")
    for key in ("relators", "generators", "matrix"):
        if key not in value:
            raise ValidationError(f"presentation.{key}: missing")
    extra = sorted(set(value) - {"relators", "generators", "matrix"})
    if extra:
        raise ValidationError(f"presentation.{extra[0]}: unknown key")
    r, s, matrix = value["relators"], value["generators"], value["matrix"]
    for key, n in (("relators", r), ("generators", s)):
        if not _is_int(n) or n < 0:
            raise ValidationError(f"presentation.{key}: expected a nonnegative integer")
    if not isinstance(matrix, list) or len(matrix) != r:
        raise ValidationError(f"presentation.matrix: expected a list of {r} rows")
    rows = []
    for i, row in enumerate(matrix):
        if not isinstance(row, list) or len(row) != s:
            raise ValidationError(f"presentation.matrix[{i}]: expected {s} entries")
        rows.append([
            parse_poly(entry, f"presentation.matrix[{i}][{j}]")
            for j, entry in enumerate(row)
        ])
    return LambdaPresentation.from_rows(rows, s)


def parse_seifert(value):
    if not isinstance(value, list):
        raise ValidationError("seifert: expected a list of rows")
    n = len(value)
    for i, row in enumerate(value):
        if not isinstance(row, list) or len(row) != n:
            raise ValidationError(f"seifert[{i}]: expected {n} entries (square matrix)")
        for j, x in enumerate(row):
            if not _is_int(x):
                raise ValidationError(f"seifert[{i}][{j}]: expected an integer")
    if n % 2:
        raise ValidationError(f"seifert: size {n} is odd, a Seifert matrix is 2g x 2g")
    return SeifertMatrix.from_rows(value)


class ModuleInputForm(forms.Form):
    presentation = forms.JSONField(required=False)
    seifert = forms.JSONField(required=False)

    def _given(self, name):
        # JSONField maps [] and {} to None; keep the literal value
        value = self.cleaned_data.get(name)
        return self.data[name] if value is None else value

    def clean_presentation(self):
        if "presentation" not in self.data:
            return None
        return parse_presentation(self._given("presentation"))

    def clean_seifert(self):
        if "seifert" not in self.data:
            return None
        return parse_seifert(self._given("seifert"))

    def clean(self):
        cleaned_data = super().clean()
        unknown = sorted(set(self.data) - set(INPUT_KINDS))
        if unknown:
            raise ValidationError(f"{unknown[0]}: unknown key")
        given = [k for k in INPUT_KINDS if k in self.data]
        if len(given) != 1:
            raise ValidationError(
                "expected exactly one of 'presentation' or 'seifert'"
            )
        return cleaned_data

    @property
    def kind(self):
        return next(k for k in INPUT_KINDS if k in self.data)

    def module(self):
        """(kind, value) of a valid form: a LambdaPresentation or a SeifertMatrix."""
        return self.kind, self.cleaned_data[self.kind]
