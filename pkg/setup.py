import os.path as osp

from setuptools import find_packages, setup


def readme():
    with open('README.md', encoding='utf-8') as f:
        return f.read()


def get_version():
    version_file = 'dnse/version.py'
    with open(version_file, 'r', encoding='utf-8') as f:
        exec(compile(f.read(), version_file, 'exec'))
    return locals()['__version__']


def parse_requirements(fname):
    """Requirement lines of ``fname``, following ``-r`` includes."""
    requirements = []
    with open(fname, 'r') as f:
        for line in f:
            line = line.split('#', 1)[0].strip()
            if not line:
                continue
            if line.startswith('-r '):
                target = osp.join(osp.dirname(fname), line[3:].strip())
                requirements.extend(parse_requirements(target))
            else:
                requirements.append(line)
    return requirements


if __name__ == '__main__':
    setup(
        name='dnse',
        version=get_version(),
        description='Pseudospectral toolkit for the delayed Navier-Stokes '
        'equations on the 3D torus',
        long_description=readme(),
        long_description_content_type='text/markdown',
        keywords='navier-stokes, delay equations, spectral methods',
        packages=find_packages(exclude=('configs', 'tools', 'tests')),
        include_package_data=True,
        classifiers=[
            'Development Status :: 3 - Alpha',
            'Operating System :: OS Independent',
            'Programming Language :: Python :: 3',
            'Programming Language :: Python :: 3.7',
            'Programming Language :: Python :: 3.8',
            'Programming Language :: Python :: 3.9',
            'Topic :: Scientific/Engineering :: Physics',
        ],
        python_requires='>=3.7',
        tests_require=parse_requirements('requirements/tests.txt'),
        install_requires=parse_requirements('requirements/runtime.txt'),
        zip_safe=False)
