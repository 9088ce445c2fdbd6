import dataclasses
import math
from collections.abc import Mapping

import numpy as np
from rest_framework import serializers
from rest_framework.renderers import JSONRenderer


def format_number(value):
    """Render a real or complex scalar; complex values as ``re+imi``."""
    if isinstance(value, (complex, np.complexfloating)):
        value = complex(value)
        if value.imag == 0:
            return format_number(value.real)
        return f"{value.real:.17g}{value.imag:+.17g}i"
    value = float(value)
    if not math.isfinite(value):
        return str(value)
    return value


def to_primitive(value):
    """Convert result values into JSON-safe primitives, preserving key order."""
    if value is None or isinstance(value, (bool, str)):
        return value
    if hasattr(value, "to_primitive"):
        return to_primitive(value.to_primitive())
    if isinstance(value, (np.bool_,)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, complex, np.floating, np.complexfloating)):
        return format_number(value)
    if isinstance(value, np.ndarray):
        return [to_primitive(item) for item in value.tolist()]
    if isinstance(value, Mapping):
        return {str(key): to_primitive(item) for key, item in value.items()}
    if isinstance(value, (set, frozenset)):
        return [to_primitive(item) for item in sorted(value)]
    if isinstance(value, (list, tuple)):
        return [to_primitive(item) for item in value]
    if dataclasses.is_dataclass(value):
        return {
            item.name: to_primitive(getattr(value, item.name))
            for item in dataclasses.fields(value)
        }
    return str(value)


class ResultValueField(serializers.Field):
    """Read-only field rendering arbitrary result payloads."""

    def __init__(self, **kwargs):
        kwargs.setdefault("read_only", True)
        super().__init__(**kwargs)

    def to_representation(self, value):
        return to_primitive(value)


class ReportSerializer(serializers.Serializer):
    command = serializers.CharField()
    seed = serializers.IntegerField(allow_null=True)
    tolerances = serializers.DictField(child=serializers.FloatField())
    inputs_digest = serializers.CharField(allow_null=True)
    passed = serializers.BooleanField(allow_null=True)
    results = ResultValueField()


class TimedReportSerializer(ReportSerializer):
    elapsed_seconds = serializers.FloatField()


def render_structured(report):
    """Byte-stable JSON rendering of a report (wall-clock time excluded)."""
    return JSONRenderer().render(ReportSerializer(report).data)
