from rest_framework import serializers

from qbflab.reports import VERDICT_CHOICES


class PauliLabelField(serializers.Field):
    """Pauli strings are written by their IXYZ label."""

    def __init__(self, **kwargs):
        kwargs.setdefault("read_only", True)
        kwargs.setdefault("allow_null", True)
        super().__init__(**kwargs)

    def to_representation(self, value):
        return value.label


class TestReportSerializer(serializers.Serializer):
    test = serializers.CharField()
    exact_probability = serializers.FloatField(min_value=0.0, max_value=1.0)
    verdict = serializers.ChoiceField(choices=VERDICT_CHOICES)
    sampled_acceptance = serializers.ListField(
        child=serializers.IntegerField(min_value=0), allow_null=True
    )
    sampled_fraction = serializers.FloatField(read_only=True, allow_null=True)
    confidence_radius = serializers.FloatField(read_only=True, allow_null=True)
    witness = PauliLabelField()
    phase = serializers.FloatField(allow_null=True)
    epsilon_bound = serializers.FloatField(allow_null=True)
    delta = serializers.FloatField(allow_null=True)
    seed = serializers.IntegerField(allow_null=True)
