from rest_framework import serializers

from pauli_core.formats import KIND_CHOICES
from pauli_core.norms import parse_exponent
from qbflab.exceptions import ParameterRangeError

FORMAT_CHOICES = ("text", "structured")
PAULI_SYMBOLS = {"X": 1, "Y": 2, "Z": 3}


def split_list(value, cast):
    """Comma separated values, e.g. ``0.6,0.8`` or ``1,3``."""
    if value in (None, ""):
        return []
    try:
        return [cast(item) for item in str(value).split(",") if item.strip()]
    except ValueError:
        raise serializers.ValidationError(f"Cannot parse list {value!r}") from None


class GlobalOptionsSerializer(serializers.Serializer):
    seed = serializers.IntegerField(min_value=0, allow_null=True, required=False)
    tol = serializers.FloatField(min_value=0.0, allow_null=True, required=False)
    out = serializers.CharField(allow_null=True, required=False)
    format = serializers.ChoiceField(choices=FORMAT_CHOICES, default="text")
    kind = serializers.ChoiceField(choices=KIND_CHOICES, allow_null=True, required=False)


class UnitIntervalField(serializers.FloatField):
    """A float strictly inside (0, 1)."""

    def to_internal_value(self, data):
        value = super().to_internal_value(data)
        if not 0.0 < value < 1.0:
            raise serializers.ValidationError(f"must lie in (0, 1), got {value}")
        return value


class ExponentField(serializers.Field):
    """Schatten exponent p >= 1, with 'inf' accepted."""

    def to_internal_value(self, data):
        try:
            return parse_exponent(data)
        except (ParameterRangeError, ValueError) as exc:
            raise serializers.ValidationError(str(exc)) from None

    def to_representation(self, value):
        return value


class PropertyTestOptionsSerializer(serializers.Serializer):
    trials = serializers.IntegerField(min_value=1, allow_null=True, required=False)
    epsilon = serializers.FloatField(min_value=0.0, max_value=1.0, allow_null=True, required=False)
    delta = serializers.FloatField(min_value=0.0, max_value=1.0, allow_null=True, required=False)
    prior = serializers.FloatField(min_value=0.0, max_value=1.0, default=0.5)


class GoldreichLevinOptionsSerializer(serializers.Serializer):
    gamma = UnitIntervalField()
    delta = UnitIntervalField()
    exact = serializers.BooleanField(default=False)


class HyperOptionsSerializer(serializers.Serializer):
    p = ExponentField()
    q = ExponentField()
    epsilon = serializers.FloatField(min_value=-1.0, max_value=1.0, allow_null=True, required=False)
    grid = serializers.CharField(allow_null=True, required=False)

    def validate_grid(self, value):
        """``n=3,count=500``; both keys optional."""
        grid = {"n": 3, "count": 500}
        if not value:
            return grid
        for item in value.split(","):
            key, _, number = item.partition("=")
            key = key.strip()
            if key not in grid:
                raise serializers.ValidationError(f"Unknown grid key {key!r}")
            try:
                grid[key] = int(number)
            except ValueError:
                raise serializers.ValidationError(f"Grid value {item!r} is not an integer") from None
            if grid[key] < 1:
                raise serializers.ValidationError(f"Grid value {item!r} must be positive")
        return grid


class SearchOptionsSerializer(serializers.Serializer):
    p = ExponentField()
    q = ExponentField()
    epsilon = serializers.FloatField(min_value=-1.0, max_value=1.0)
    n = serializers.IntegerField(min_value=1, max_value=6)
    restarts = serializers.IntegerField(min_value=1, default=8)


class DynamicsOptionsSerializer(serializers.Serializer):
    n = serializers.IntegerField(min_value=2)
    t = serializers.FloatField()
    qubit = serializers.IntegerField(min_value=1)
    pauli = serializers.ChoiceField(choices=tuple(PAULI_SYMBOLS))
    radii = serializers.CharField(allow_null=True, required=False)
    times = serializers.CharField(allow_null=True, required=False)
    gamma = UnitIntervalField(default=0.2)
    epsilon = UnitIntervalField(default=0.05)
    delta = UnitIntervalField(default=0.05)

    def validate_radii(self, value):
        radii = split_list(value, int)
        if any(radius < 1 for radius in radii):
            raise serializers.ValidationError("Radii must be at least 1")
        return radii or None

    def validate_times(self, value):
        return split_list(value, float) or None

    def validate(self, attrs):
        if attrs["qubit"] > attrs["n"]:
            raise serializers.ValidationError({"qubit": f"Qubit {attrs['qubit']} is outside 1..{attrs['n']}"})
        attrs["symbol"] = PAULI_SYMBOLS[attrs["pauli"]]
        return attrs
