from rest_framework import serializers



class FieldSpecSerializer(serializers.Serializer):
    """
    Read-only JSON form of a FieldSpec: {p, e, modulus: [c_0, ..., c_e]}.
    """
    p = serializers.IntegerField(source='characteristic', read_only=True)
    e = serializers.IntegerField(source='degree', read_only=True)
    modulus = serializers.ListField(child=serializers.IntegerField(), read_only=True)



class FieldElementField(serializers.Field):
    """
    Field elements travel as their canonical integer index.
    """

    def to_representation(self, value):
        return None if value is None else value.index
