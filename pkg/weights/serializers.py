from rest_framework import serializers



class HistogramField(serializers.Field):
    """
    {weight: count} with weights in increasing order.
    """
    def to_representation(self, value):
        return {int(w): int(count) for w, count in sorted(value.items())}



class WeightSpectrumSerializer(serializers.Serializer):
    spectrum = HistogramField(source='counts', read_only=True)



class GhwVectorSerializer(serializers.Serializer):
    ghw = serializers.ListField(child=serializers.IntegerField(), source='values', read_only=True)
    witnesses = serializers.ListField(read_only=True)
