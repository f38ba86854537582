from rest_framework import serializers

from fields.serializers import FieldElementField



class SymPolySerializer(serializers.Serializer):
    """
    {m, coeffs: [a_0, ..., a_m]} with coefficients as canonical indices.
    """
    m = serializers.IntegerField(read_only=True)
    coeffs = serializers.ListField(child=serializers.IntegerField(), source='indices', read_only=True)



class ClassificationSerializer(serializers.Serializer):
    type = serializers.CharField(source='tag.value', read_only=True)
    alpha = FieldElementField(read_only=True)
    root = FieldElementField(read_only=True)



class PointTupleSerializer(serializers.Serializer):

    def to_representation(self, instance):
        return list(instance.indices)
