def is_prime(k):
    if k < 2:
        return False
    return all(k % d for d in range(2, int(k ** 0.5) + 1))


a, b = map(int, input().split(','))
x, y = int(str(a)[::-1]), int(str(b)[::-1])
if is_prime(x) and is_prime(y):
    print(x + y)
elif is_prime(x) or is_prime(y):
    print(a + b)
else:
    print(a * b)
