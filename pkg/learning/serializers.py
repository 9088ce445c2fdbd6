from rest_framework import serializers


class WeightEstimateSerializer(serializers.Serializer):
    value = serializers.FloatField()
    radius = serializers.FloatField(min_value=0.0)
    confidence = serializers.FloatField(min_value=0.0, max_value=1.0)
    queries_used = serializers.IntegerField(min_value=0)


class CandidateSerializer(serializers.Serializer):
    string = serializers.SerializerMethodField()
    estimate = serializers.SerializerMethodField()

    def get_string(self, obj):
        return obj[0].label

    def get_estimate(self, obj):
        return float(obj[1])


class GoldreichLevinResultSerializer(serializers.Serializer):
    candidates = CandidateSerializer(many=True, read_only=True)
    weight_estimations = serializers.IntegerField()
    coefficient_estimations = serializers.IntegerField()
    queries = serializers.IntegerField()
    max_list_size = serializers.IntegerField()
    list_bound = serializers.FloatField()
    estimation_bound = serializers.FloatField()
    list_bound_respected = serializers.BooleanField(read_only=True)
    seed = serializers.IntegerField(allow_null=True)
    exact = serializers.BooleanField()
