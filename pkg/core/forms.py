from django import forms

from .exceptions import QWeightError
from .stabilizer import read_generators

FORMATS = [('text', 'Text'), ('csv', 'CSV'), ('json', 'JSON')]


class CodeParametersForm(forms.Form):
    n = forms.IntegerField(min_value=1)
    k = forms.IntegerField(min_value=0)
    d = forms.IntegerField(min_value=1)

    def clean(self):
        cleaned_data = super().clean()
        n = cleaned_data.get("n")
        k = cleaned_data.get("k")
        if n is not None and k is not None and k > n:
            raise forms.ValidationError("k cannot exceed n.")
        return cleaned_data


class LpCheckForm(CodeParametersForm):
    w = forms.IntegerField(min_value=1)

    def clean(self):
        cleaned_data = super().clean()
        n = cleaned_data.get("n")
        k = cleaned_data.get("k")
        w = cleaned_data.get("w")
        if n is not None and w is not None and w > n:
            raise forms.ValidationError("The weight w cannot exceed n.")
        if n is not None and k is not None and not 1 <= k < n:
            raise forms.ValidationError("The weight LP needs 1 <= k < n.")
        d = cleaned_data.get("d")
        if d is not None and d < 2:
            raise forms.ValidationError("The weight LP needs d >= 2.")
        return cleaned_data


class TableForm(forms.Form):
    max_n = forms.IntegerField(min_value=4)
    jobs = forms.IntegerField(min_value=1, required=False)
    format = forms.ChoiceField(choices=FORMATS, required=False)
    output = forms.CharField(required=False)
    overrides = forms.CharField(required=False)

    def clean_format(self):
        return self.cleaned_data["format"] or "csv"


class ArchitectureForm(CodeParametersForm):
    graph = forms.CharField(required=False)
    centers = forms.CharField(required=False)
    radius = forms.IntegerField(min_value=0, required=False)
    r_max = forms.IntegerField(min_value=0, required=False)
    max_subset_size = forms.IntegerField(min_value=1, required=False)


class ReduceForm(forms.Form):
    MODES = [('check', 'Decide both ends of the chain'), ('transform', 'Print the transformed instances')]

    mode = forms.ChoiceField(choices=MODES, required=False)
    instance = forms.CharField(required=False)
    random = forms.IntegerField(min_value=1, required=False)
    seed = forms.IntegerField(required=False)
    m = forms.IntegerField(min_value=1, required=False)
    length = forms.IntegerField(min_value=1, required=False)

    def clean(self):
        cleaned_data = super().clean()
        if not cleaned_data.get("instance") and not cleaned_data.get("random"):
            raise forms.ValidationError("Give an instance file or a number of random instances.")
        m = cleaned_data.get("m")
        length = cleaned_data.get("length")
        if m is not None and length is not None and m > length:
            raise forms.ValidationError("A full-rank parity-check matrix needs m <= n.")
        if not cleaned_data.get("mode"):
            cleaned_data["mode"] = "check"
        return cleaned_data


class GeneratorsForm(forms.Form):
    generators = forms.CharField(widget=forms.Textarea(attrs={"rows": 6}))

    def clean_generators(self):
        """Parse the text into a stabilizer group"""
        text = self.cleaned_data["generators"]
        try:
            return read_generators(text)
        except QWeightError as exc:
            raise forms.ValidationError(str(exc)) from exc
