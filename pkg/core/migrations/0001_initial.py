# Generated by Django 5.2.6 on 2026-10-17 09:12

from django.db import migrations, models


class Migration(migrations.Migration):

    initial = True

    dependencies = [
    ]

    operations = [
        migrations.CreateModel(
            name='TableCell',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('n', models.PositiveSmallIntegerField()),
                ('k', models.PositiveSmallIntegerField()),
                ('d', models.PositiveSmallIntegerField()),
                ('wlb', models.PositiveSmallIntegerField(blank=True, null=True)),
                ('wub', models.PositiveSmallIntegerField(blank=True, null=True)),
                ('source', models.CharField(choices=[('rate-rule', 'Rate rule'), ('nk-bound', '2n/(n-k) bound'), ('lp', 'Weight LP'), ('no-code', 'No code'), ('override', 'Documented override')], max_length=20)),
                ('citation', models.TextField(blank=True)),
                ('computed_at', models.DateTimeField(auto_now=True)),
            ],
            options={
                'ordering': ['n', 'd', 'k'],
                'constraints': [models.UniqueConstraint(fields=('n', 'k', 'd'), name='unique_cell')],
            },
        ),
        migrations.CreateModel(
            name='VerificationRecord',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('label', models.CharField(max_length=40)),
                ('expression', models.TextField()),
                ('status', models.CharField(choices=[('verified', 'Verified'), ('mismatch', 'Mismatch'), ('downgraded', 'Upper bound only'), ('incomplete', 'Incomplete')], max_length=20)),
                ('n', models.PositiveSmallIntegerField(blank=True, null=True)),
                ('k', models.PositiveSmallIntegerField(blank=True, null=True)),
                ('d', models.PositiveSmallIntegerField(blank=True, null=True)),
                ('w', models.PositiveSmallIntegerField(blank=True, null=True)),
                ('w_upper', models.PositiveSmallIntegerField(blank=True, null=True)),
                ('optimal', models.BooleanField(default=True)),
                ('message', models.TextField(blank=True)),
                ('verified_at', models.DateTimeField(auto_now_add=True)),
            ],
            options={
                'ordering': ['-verified_at', 'label'],
            },
        ),
    ]
