from dataclasses import dataclass

from rest_framework import serializers

from django.conf import settings
from django.core.exceptions import ValidationError as DjangoValidationError

from fields.arithmetic import FieldSpec



# Option dests whose command-line flag differs from the dest name
FLAG_NAMES = {
    'set_kind': '--set',
    'output_format': '--format',
    'list_zeroes': '--list',
}


# FieldSpec error keys reported under the option that carries them
FIELD_ERROR_KEYS = {
    'order': 'q',
    'characteristic': 'p',
    'degree': 'e',
}


def flag_name(dest):
    return FLAG_NAMES.get(dest, '--' + dest.replace('_', '-'))


def parse_indices(value):
    """
    Parse a comma-separated list of non-negative integers such as "3,0,1".
    """
    try:
        indices = [int(part) for part in str(value).split(',') if part.strip() != '']
    except ValueError:
        raise serializers.ValidationError(f"'{value}' is not a comma-separated list of integers.")
    if any(i < 0 for i in indices):
        raise serializers.ValidationError("Entries must be non-negative canonical indices.")
    return tuple(indices)



@dataclass(frozen=True)
class RunConfig:
    """
    A fully validated request: the field, the code parameters and the command options.
    """
    field: FieldSpec = None
    m: int = None
    set_kind: str = 'full'
    output_format: str = 'text'
    jobs: int = 1
    force: bool = False
    r: int = None
    s: int = None
    coeffs: tuple = ()
    subset: tuple = None
    witnesses: bool = False
    list_zeroes: bool = False
    suite: str = 'all'

    @property
    def q(self):
        return None if self.field is None else self.field.order



class RunConfigSerializer(serializers.Serializer):
    """
    Shared validation of the field and code options of every command and API endpoint.
    """
    q = serializers.IntegerField(required=False, min_value=2)
    p = serializers.IntegerField(required=False, min_value=2)
    e = serializers.IntegerField(min_value=1, default=1)
    modulus = serializers.CharField(required=False)
    m = serializers.IntegerField(required=False, min_value=1)
    set_kind = serializers.ChoiceField(choices=['full', 'orbit'], default='full')
    output_format = serializers.ChoiceField(choices=['text', 'json', 'csv'], default='text')
    jobs = serializers.IntegerField(required=False, min_value=1)
    force = serializers.BooleanField(default=False)

    requires_field = True
    requires_m = True
    capped = False

    def validate_modulus(self, value):
        return parse_indices(value)

    def validate(self, attrs):
        """
        Build the FieldSpec and enforce the cross-field constraints.
        """
        attrs['field'] = self.build_field(attrs)
        if self.requires_m and attrs.get('m') is None:
            raise serializers.ValidationError({'m': ["This option is required."]})

        if self.capped and not attrs.get('force'):
            limits = settings.SYMCODE
            q = attrs['field'].order if attrs['field'] else None
            if q is not None and q > limits['MAX_Q']:
                raise serializers.ValidationError(
                    {'q': [f"q={q} is above the verification cap {limits['MAX_Q']}; pass --force to run it."]}
                )
            if attrs.get('m') is not None and attrs['m'] > limits['MAX_M']:
                raise serializers.ValidationError(
                    {'m': [f"m={attrs['m']} is above the verification cap {limits['MAX_M']}; pass --force to run it."]}
                )
        return attrs

    def build_field(self, attrs):
        q, p = attrs.get('q'), attrs.get('p')
        if q is not None and p is not None:
            raise serializers.ValidationError({'q': ["Pass either --q or --p/--e, not both."]})
        if q is None and p is None:
            if self.requires_field:
                raise serializers.ValidationError({'q': ["One of --q or --p is required."]})
            return None

        modulus = attrs.get('modulus', ())
        try:
            if q is not None:
                return FieldSpec.from_order(q, modulus)
            return FieldSpec(p, attrs.get('e', 1), modulus)
        except DjangoValidationError as exc:
            raise serializers.ValidationError(
                {FIELD_ERROR_KEYS.get(key, key): messages for key, messages in exc.message_dict.items()}
            )

    def create(self, validated_data):
        for name in ('q', 'p', 'e', 'modulus'):
            validated_data.pop(name, None)
        if validated_data.get('jobs') is None:
            validated_data['jobs'] = settings.SYMCODE['JOBS']
        return RunConfig(**validated_data)



class ZeroesConfigSerializer(RunConfigSerializer):
    coeffs = serializers.CharField()
    subset = serializers.CharField(required=False)
    list_zeroes = serializers.BooleanField(default=False)

    def validate_coeffs(self, value):
        return parse_indices(value)

    def validate_subset(self, value):
        return tuple(sorted(set(parse_indices(value))))

    def validate(self, attrs):
        attrs = super().validate(attrs)
        q, m = attrs['field'].order, attrs['m']

        coeffs = attrs['coeffs']
        if len(coeffs) != m + 1:
            raise serializers.ValidationError({'coeffs': [f"Expected m + 1 = {m + 1} coefficients, got {len(coeffs)}."]})
        if any(c >= q for c in coeffs):
            raise serializers.ValidationError({'coeffs': [f"Coefficients must be element indices below q={q}."]})

        if 'subset' in attrs:
            subset = attrs['subset']
            if any(i >= q for i in subset):
                raise serializers.ValidationError({'subset': [f"Subset entries must be element indices below q={q}."]})
            if len(subset) < m:
                raise serializers.ValidationError({'subset': [f"|S|={len(subset)} is smaller than m={m}."]})
        return attrs



class GhwConfigSerializer(RunConfigSerializer):
    witnesses = serializers.BooleanField(default=False)



class SpectraConfigSerializer(RunConfigSerializer):
    r = serializers.IntegerField(required=False, min_value=0)

    def validate(self, attrs):
        attrs = super().validate(attrs)
        k = attrs['m'] + 1
        if attrs.get('r') is not None and attrs['r'] > k:
            raise serializers.ValidationError({'r': [f"r={attrs['r']} exceeds the code dimension bound m + 1 = {k}."]})
        return attrs



class ExtendConfigSerializer(RunConfigSerializer):
    s = serializers.IntegerField(min_value=1)



class VerifyConfigSerializer(RunConfigSerializer):
    suite = serializers.ChoiceField(choices=['zeroes', 'tables', 'codes', 'spectra', 'example', 'all'], default='all')

    requires_field = False
    requires_m = False
    capped = True

    # Suites whose cases have a fixed m; --m only selects cases of the zeroes and codes suites
    FIXED_M = {'tables': 2, 'spectra': 2, 'example': 3}

    def validate(self, attrs):
        attrs = super().validate(attrs)
        fixed = self.FIXED_M.get(attrs.get('suite', 'all'))
        if fixed is not None and attrs.get('m') not in (None, fixed):
            raise serializers.ValidationError(
                {'m': [f"The {attrs['suite']} suite always runs with m={fixed}; leave --m out."]}
            )
        if attrs.get('suite') == 'example' and attrs['field'] is not None and attrs['field'].order != 5:
            raise serializers.ValidationError({'q': ["The example suite always runs over F_5; leave --q out."]})
        return attrs
