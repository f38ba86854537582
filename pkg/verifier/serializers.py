from rest_framework import serializers



class CheckSerializer(serializers.Serializer):
    claim = serializers.CharField(read_only=True)
    statement = serializers.CharField(read_only=True)
    params = serializers.DictField(read_only=True)
    status = serializers.CharField(source='status.value', read_only=True)
    predicted = serializers.JSONField(read_only=True)
    computed = serializers.JSONField(read_only=True)
    counterexample = serializers.JSONField(read_only=True)



class SkipSerializer(serializers.Serializer):
    claim = serializers.CharField(read_only=True)
    params = serializers.DictField(read_only=True)
    reason = serializers.CharField(read_only=True)



class VerificationReportSerializer(serializers.Serializer):
    """
    {passed, summary, checks, skipped}; checks keep the order in which the suites ran them.
    """
    passed = serializers.BooleanField(read_only=True)
    summary = serializers.DictField(read_only=True)
    checks = CheckSerializer(many=True, read_only=True)
    skipped = SkipSerializer(many=True, read_only=True)
