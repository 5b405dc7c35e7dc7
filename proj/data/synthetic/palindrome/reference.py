i = input()
print(i, 'is a palindrome.' if i.lower() == i.lower()[::-1] else 'is NOT a palindrome.')
