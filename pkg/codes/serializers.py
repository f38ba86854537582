from rest_framework import serializers



class CodeParamsSerializer(serializers.Serializer):
    n = serializers.IntegerField(read_only=True)
    k = serializers.IntegerField(read_only=True)
    d = serializers.IntegerField(read_only=True)



class GeneratorMatrixSerializer(serializers.Serializer):
    """
    {q, m, kind, rows} of a LinearCode; rows are sigma^0..sigma^m over the points in lexicographic order.
    """
    q = serializers.IntegerField(read_only=True)
    m = serializers.IntegerField(read_only=True)
    kind = serializers.CharField(source='kind.value', read_only=True)
    rows = serializers.ListField(child=serializers.ListField(child=serializers.IntegerField()), read_only=True)
