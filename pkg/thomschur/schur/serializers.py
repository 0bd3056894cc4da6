from rest_framework import serializers

from schur.models import CheckStatus, TableKind
from schur.services.exceptions import InvalidPartitionException
from schur.services.schur_calculus import Partition
from schur.services.schur_expansion import SchurExpansion


class SchurTermSerializer(serializers.Serializer):
    partition = serializers.ListField(child=serializers.IntegerField(min_value=0), allow_empty=True)
    coeff = serializers.CharField()

    def validate_partition(self, value):
        try:
            return Partition.of(value)
        except InvalidPartitionException as exc:
            raise serializers.ValidationError(exc.detail)

    def validate_coeff(self, value):
        try:
            return int(value)
        except ValueError:
            raise serializers.ValidationError(f"Coefficient '{value}' is not a decimal integer")


class SchurExpansionSerializer(serializers.Serializer):
    """The interchange format {"r": .., "name": .., "terms": [{"partition": [..], "coeff": ".."}]}."""
    r = serializers.IntegerField(min_value=1, allow_null=True, required=False)
    name = serializers.CharField(allow_null=True, allow_blank=True, required=False)
    terms = SchurTermSerializer(many=True)

    @staticmethod
    def build(validated_data) -> SchurExpansion:
        return SchurExpansion([(term["partition"], term["coeff"]) for term in validated_data["terms"]],
                              r=validated_data.get("r"), name=validated_data.get("name") or None)

    def create(self, validated_data) -> SchurExpansion:
        return self.build(validated_data)

    def to_representation(self, instance: SchurExpansion):
        return instance.to_data()


class CheckEntrySerializer(serializers.Serializer):
    equation_label = serializers.CharField()
    status = serializers.ChoiceField(choices=CheckStatus.choices)
    residual = serializers.CharField(source="residual_text")
    detail = serializers.CharField(allow_blank=True)


class ReportSerializer(serializers.Serializer):
    title = serializers.CharField()
    passed = serializers.BooleanField(read_only=True)
    entries = CheckEntrySerializer(many=True)


class CoeffTableSerializer(serializers.Serializer):
    kind = serializers.ChoiceField(choices=TableKind.choices)
    first_row = serializers.IntegerField()
    first_column = serializers.IntegerField()
    entries = serializers.ListField(child=serializers.ListField(child=serializers.IntegerField()))


class GoldenFileSerializer(serializers.Serializer):
    SOURCES = ("thom_I22", "p_r_o", "h_r", "h_r_o", "thom_A", "f_i_r", "d_table", "e_table")

    description = serializers.CharField()
    origin = serializers.CharField()
    source = serializers.ChoiceField(choices=SOURCES)
    i = serializers.IntegerField(min_value=1, required=False)
    first_row = serializers.IntegerField(required=False)
    rows = serializers.ListField(child=serializers.ListField(child=serializers.IntegerField()), required=False)
    expansions = SchurExpansionSerializer(many=True, required=False)

    def validate(self, attrs):
        is_table = attrs["source"].endswith("_table")
        if is_table and ("rows" not in attrs or "first_row" not in attrs):
            raise serializers.ValidationError("Table golden files need first_row and rows")
        if not is_table and "expansions" not in attrs:
            raise serializers.ValidationError("Expansion golden files need expansions")
        if attrs["source"] in ("thom_A", "f_i_r") and "i" not in attrs:
            raise serializers.ValidationError(f"{attrs['source']} golden files need i")
        return attrs

    def create(self, validated_data) -> dict:
        if "expansions" in validated_data:
            validated_data["expansions"] = [SchurExpansionSerializer.build(expansion)
                                            for expansion in validated_data["expansions"]]
        return validated_data
