from setuptools import find_packages, setup


def readme():
    with open('README.md', encoding='utf-8') as f:
        content = f.read()
    return content


version_file = 'conebarrel/version.py'


def get_version():
    with open(version_file, 'r') as f:
        exec(compile(f.read(), version_file, 'exec'))
    import sys

    # return short version for sdist
    if 'sdist' in sys.argv or 'bdist_wheel' in sys.argv:
        return locals()['short_version']
    else:
        return locals()['__version__']


def parse_requirements(fname='requirements.txt', with_version=True, exclude=('pytest', )):
    """Parse the package dependencies listed in a requirements file.

    Args:
        fname (str): path to requirements file
        with_version (bool): if True include version specs
        exclude (tuple[str]): packages left out (test-only tooling)

    Returns:
        List[str]: list of requirements items
    """
    import re
    from os.path import exists

    def parse_line(line):
        pat = '(' + '|'.join(['>=', '==', '>']) + ')'
        parts = [p.strip() for p in re.split(pat, line, maxsplit=1)]
        info = {'package': parts[0]}
        if len(parts) > 1:
            info['version'] = tuple(parts[1:])
        return info

    packages = []
    if not exists(fname):
        return packages
    with open(fname, 'r') as f:
        for line in f.readlines():
            line = line.strip()
            if not line or line.startswith('#'):
                continue
            info = parse_line(line)
            if info['package'] in exclude:
                continue
            parts = [info['package']]
            if with_version and 'version' in info:
                parts.extend(info['version'])
            packages.append(''.join(parts))
    return packages


if __name__ == '__main__':
    setup(name='conebarrel',
          version=get_version(),
          description='Exact-rational verifier for a barreled, non-upper-barreled '
                      'locally convex cone.',
          keywords='locally convex cones, barrels, counterexample verification',
          long_description=readme(),
          long_description_content_type='text/markdown',
          packages=find_packages(exclude=('tests', 'tools', 'examples')),
          include_package_data=True,
          license='Apache License 2.0',
          python_requires='>=3.7',
          install_requires=parse_requirements('requirements.txt'),
          extras_require={'tests': ['pytest']},
          entry_points={
              'console_scripts': ['conebarrel-verify=conebarrel.cli:main'],
          })
